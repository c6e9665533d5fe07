import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import all_polys, naive_skew_mul, naive_zero_pairs
from skewarm import default_corpus, identity_map, paper_fixture
from skewarm.constructions import upper_triangular, zmod
from skewarm.skewpoly import (SkewPoly, add, apply_twist_to_poly, enumerate_idempotent_polys,
                              enumerate_zero_pairs, poly_right_annihilator_of_constant, skew_mul)

CORPUS = default_corpus()
SMALL = [fx for fx in CORPUS if fx.ring.order <= 8]


def P(fx, *coeffs):
    R = fx.ring
    return SkewPoly(R, fx.twist, tuple(R.element(c) if isinstance(c, str) else c for c in coeffs))


def test_ex1_pair_multiplies_to_zero():
    fx = paper_fixture("EX1-swap")
    R = fx.ring
    # -(1,0) = (1,0) in characteristic 2
    f = P(fx, "(1,0)", "(1,0)")
    g = P(fx, "(0,1)", "(1,0)")
    assert skew_mul(f, g).is_zero()
    assert R.label(R.mul[f.coeff(1), fx.twist(g.coeff(0))]) == "(1,0)"


def test_ex2_square_is_zero():
    fx = paper_fixture("EX2-z4mat")
    f = P(fx, "[[2,0],[0,2]]", "[[2,1],[0,2]]")
    assert skew_mul(f, f).is_zero()


def test_one_is_identity(corpus):
    for fx in corpus:
        one = SkewPoly.constant(fx.ring, fx.twist, fx.ring.one)
        f = SkewPoly(fx.ring, fx.twist, (fx.ring.one, fx.ring.one, fx.ring.zero, fx.ring.one))
        assert skew_mul(f, one) == f and skew_mul(one, f) == f


def test_defining_relation(corpus):
    """x a = alpha(a) x for every element a."""
    for fx in corpus:
        R, alpha = fx.ring, fx.twist
        x = SkewPoly.x(R, alpha)
        for a in range(R.order):
            c = SkewPoly.constant(R, alpha, a)
            assert skew_mul(x, c) == skew_mul(SkewPoly.constant(R, alpha, int(alpha(a))), x)


def test_add_and_twist():
    fx = paper_fixture("EX1-swap")
    R = fx.ring
    f = P(fx, "(1,0)", "(1,1)")
    zero = SkewPoly(R, fx.twist, ())
    assert add(f, zero) == f
    assert apply_twist_to_poly(SkewPoly.constant(R, fx.twist, R.element("(1,0)"))).coeffs == (R.element("(0,1)"),)
    assert apply_twist_to_poly(apply_twist_to_poly(f)) == f


def test_mixing_rings_is_an_error():
    a = paper_fixture("EX1-swap")
    b = paper_fixture("Z4")
    with pytest.raises(ValueError):
        skew_mul(P(a, 1), P(b, 1))


@pytest.mark.parametrize("fx", SMALL, ids=lambda fx: fx.id)
def test_identity_twist_agrees_with_ordinary_product(fx):
    R = fx.ring
    idm = identity_map(R)
    polys = all_polys(R, 2)
    rng = np.random.default_rng(0)
    picks = [polys[i] for i in rng.choice(len(polys), size=min(len(polys), 60), replace=False)]
    for f in picks:
        for g in picks:
            ordinary = [R.zero] * 5
            for i, a in enumerate(f):
                for j, b in enumerate(g):
                    ordinary[i + j] = int(R.add[ordinary[i + j], R.mul[a, b]])
            assert skew_mul(SkewPoly(R, idm, f), SkewPoly(R, idm, g)).padded(4) == tuple(ordinary)


@pytest.mark.parametrize("fx", CORPUS[:12], ids=lambda fx: fx.id)
def test_matches_naive_product(fx):
    R, alpha = fx.ring, fx.twist
    rng = np.random.default_rng(1)
    for _ in range(200):
        f = tuple(int(v) for v in rng.integers(0, R.order, size=3))
        g = tuple(int(v) for v in rng.integers(0, R.order, size=2))
        assert skew_mul(SkewPoly(R, alpha, f), SkewPoly(R, alpha, g)).padded(3) == tuple(naive_skew_mul(R, alpha, f, g))


def _ring_poly(fx, draw_coeffs):
    return SkewPoly(fx.ring, fx.twist, tuple(draw_coeffs))


@st.composite
def triples(draw):
    fx = draw(st.sampled_from(CORPUS))
    n = fx.ring.order
    coeffs = st.lists(st.integers(0, n - 1), min_size=0, max_size=4)
    return fx, draw(coeffs), draw(coeffs), draw(coeffs)


@settings(max_examples=400, deadline=None)
@given(triples())
def test_associative_and_distributive(t):
    fx, a, b, c = t
    f, g, h = (_ring_poly(fx, x) for x in (a, b, c))
    assert skew_mul(skew_mul(f, g), h) == skew_mul(f, skew_mul(g, h))
    assert skew_mul(f, g + h) == skew_mul(f, g) + skew_mul(f, h)
    assert skew_mul(f + g, h) == skew_mul(f, h) + skew_mul(g, h)


@pytest.mark.parametrize("fx", CORPUS, ids=lambda fx: fx.id)
def test_associativity_bulk(fx):
    """10^4 random degree <= 2 triples per corpus entry, vectorised via tables."""
    R, alpha = fx.ring, fx.twist
    rng = np.random.default_rng(7)
    N = 10_000
    F, G, H = (rng.integers(0, R.order, size=(N, 3)) for _ in range(3))

    def mul(A, B):
        da, db = A.shape[1], B.shape[1]
        out = np.full((N, da + db - 1), R.zero)
        for i in range(da):
            tw = alpha.power_table(i)
            for j in range(db):
                out[:, i + j] = R.add[out[:, i + j], R.mul[A[:, i], tw[B[:, j]]]]
        return out

    assert (mul(mul(F, G), H) == mul(F, mul(G, H))).all()


# --- zero pairs ---------------------------------------------------------------

def test_z2_is_a_domain(Z2):
    assert list(enumerate_zero_pairs(Z2, None, 1)) == []


def test_ex1_pair_is_enumerated():
    fx = paper_fixture("EX1-swap")
    R = fx.ring
    target = ((R.element("(1,0)"), R.element("(1,0)")), (R.element("(0,1)"), R.element("(1,0)")))
    pairs = {(z.f.padded(1), z.g.padded(1)) for z in enumerate_zero_pairs(R, fx.twist, 1)}
    assert target in pairs


@pytest.mark.parametrize("fx", [f for f in SMALL if f.ring.order <= 4], ids=lambda fx: fx.id)
@pytest.mark.parametrize("strategy", ["dfs", "exhaustive"])
def test_zero_pairs_match_naive_oracle(fx, strategy):
    got = [(z.f.padded(2), z.g.padded(1)) for z in enumerate_zero_pairs(fx.ring, fx.twist, 2, 1, strategy)]
    assert got == naive_zero_pairs(fx.ring, fx.twist, 2, 1)


@pytest.mark.parametrize("fx", SMALL, ids=lambda fx: fx.id)
def test_dfs_equals_exhaustive_d1(fx):
    a = [(z.f.coeffs, z.g.coeffs) for z in enumerate_zero_pairs(fx.ring, fx.twist, 1, strategy="dfs")]
    b = [(z.f.coeffs, z.g.coeffs) for z in enumerate_zero_pairs(fx.ring, fx.twist, 1, strategy="exhaustive")]
    assert a == b


@pytest.mark.parametrize("n,d", [(2, 0), (2, 1), (4, 0), (4, 1), (3, 1), (2, 2)])
def test_exhaustive_visit_count(n, d):
    scan = enumerate_zero_pairs(zmod(n), None, d, strategy="exhaustive")
    list(scan)
    assert scan.status == "exhausted"
    assert scan.visited == (n ** (d + 1) - 1) ** 2


def test_exhaustive_visit_count_unequal_degrees():
    scan = enumerate_zero_pairs(zmod(4), None, 1, 2, strategy="exhaustive")
    list(scan)
    assert scan.visited == (4 ** 2 - 1) * (4 ** 3 - 1)


def test_budget_hit_reports_status():
    T = upper_triangular(zmod(3), 2)
    scan = enumerate_zero_pairs(T, None, 1, budget=500)
    pairs = list(scan)
    assert scan.status == "budget-hit"
    assert scan.visited > 500
    full = list(enumerate_zero_pairs(T, None, 1))
    assert [(z.f.coeffs, z.g.coeffs) for z in pairs] == [(z.f.coeffs, z.g.coeffs) for z in full[:len(pairs)]]


def test_bad_arguments(Z2):
    with pytest.raises(ValueError):
        list(enumerate_zero_pairs(Z2, None, -1))
    with pytest.raises(ValueError):
        list(enumerate_zero_pairs(Z2, None, 1, budget=0))
    with pytest.raises(ValueError):
        list(enumerate_zero_pairs(Z2, None, 1, strategy="bfs"))


def test_jobs_do_not_change_stream():
    fx = paper_fixture("EX2-z4mat")
    one = [(z.f.coeffs, z.g.coeffs) for z in enumerate_zero_pairs(fx.ring, fx.twist, 1, jobs=1)]
    many = [(z.f.coeffs, z.g.coeffs) for z in enumerate_zero_pairs(fx.ring, fx.twist, 1, jobs=4)]
    assert one == many


# --- idempotents and annihilators --------------------------------------------------

def _naive_idempotent_polys(R, alpha, d):
    out = []
    for e in all_polys(R, d):
        sq = naive_skew_mul(R, alpha, e, e)
        if tuple(sq[:d + 1]) == e and all(c == R.zero for c in sq[d + 1:]):
            out.append(e)
    return out


@pytest.mark.parametrize("fx", SMALL, ids=lambda fx: fx.id)
def test_idempotent_polys_vs_naive(fx):
    got = [e.padded(2) for e in enumerate_idempotent_polys(fx.ring, fx.twist, 2)]
    assert got == _naive_idempotent_polys(fx.ring, fx.twist, 2)
    assert (fx.ring.zero,) * 3 in got and (fx.ring.one, fx.ring.zero, fx.ring.zero) in got


def test_abelian_fixed_idempotents_give_constant_idempotents(corpus):
    from skewarm.endo import fixes_idempotents
    from skewarm.ring import is_abelian
    for fx in corpus:
        if fx.ring.order > 16 or not (is_abelian(fx.ring).holds and fixes_idempotents(fx.ring, fx.twist).holds):
            continue
        for e in enumerate_idempotent_polys(fx.ring, fx.twist, 2):
            assert e.degree <= 0


def test_t2_has_nonconstant_idempotent(T2Z2):
    idm = identity_map(T2Z2)
    e11, e12 = T2Z2.element("[[1,0],[0,0]]"), T2Z2.element("[[0,1],[0,0]]")
    polys = enumerate_idempotent_polys(T2Z2, idm, 1)
    assert SkewPoly(T2Z2, idm, (e11, e12)) in polys
    assert any(p.degree >= 1 for p in polys)


def test_poly_annihilator_examples(Z4):
    idm = identity_map(Z4)
    assert len(poly_right_annihilator_of_constant(Z4, idm, 0, 1).polys) == 16
    one = poly_right_annihilator_of_constant(Z4, idm, 1, 1)
    assert [p.coeffs for p in one.polys] == [()]
    two = poly_right_annihilator_of_constant(Z4, idm, 2, 1)
    assert sorted(p.padded(1) for p in two.polys) == [(0, 0), (0, 2), (2, 0), (2, 2)]
    assert not two.idempotent_generated
