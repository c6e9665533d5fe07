import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import naive_center
from skewarm.constructions import (constant_diagonal_subring, direct_product, gf4, relabel, upper_triangular,
                                   zmod)
from skewarm.ring import (RingAxiomError, center, central_regulars_are_units, idempotents,
                          is_abelian, is_baer, is_ideal, is_prime, is_reduced, is_right_ideal, is_right_pp,
                          is_semiprime, left_annihilator, nilpotents, principal_right_ideal, quotient,
                          regular_elements, right_annihilator, two_sided_ideals, units, validate_ring)


def z4_tables():
    add = [[(a + b) % 4 for b in range(4)] for a in range(4)]
    mul = [[(a * b) % 4 for b in range(4)] for a in range(4)]
    return add, mul


# --- validation -----------------------------------------------------------

def test_z4_tables_validate():
    add, mul = z4_tables()
    R = validate_ring(add, mul, 0, 1, "Z4")
    assert R.order == 4


def test_patched_identity_reports_witness():
    add, mul = z4_tables()
    mul[1][1] = 3
    with pytest.raises(RingAxiomError) as exc:
        validate_ring(add, mul, 0, 1)
    assert exc.value.axiom == "one is not identity"
    assert exc.value.witness == (1,)


def test_nonassociative_multiplication_gives_triple():
    add, mul = z4_tables()
    # 2*3 = 6 = 2, patch 2*3 -> 0 (and 3*2 for symmetry): breaks associativity before distributivity
    mul[2][3] = mul[3][2] = 0
    with pytest.raises(RingAxiomError) as exc:
        validate_ring(add, mul, 0, 1)
    assert len(exc.value.witness) == 3
    a, b, c = exc.value.witness
    M = np.array(mul)
    if exc.value.axiom == "multiplication not associative":
        assert M[M[a, b], c] != M[a, M[b, c]]
    else:
        assert "distributivity" in exc.value.axiom


@pytest.mark.parametrize("bad", [
    ("shape", lambda a, m: (a[:3], m)),
    ("range", lambda a, m: ([[9] * 4] + a[1:], m)),
])
def test_malformed_tables(bad):
    add, mul = z4_tables()
    a, m = bad[1](add, mul)
    with pytest.raises(RingAxiomError) as exc:
        validate_ring(a, m, 0, 1)
    assert exc.value.axiom == "malformed table"


def test_zero_equals_one_rejected():
    add, mul = z4_tables()
    with pytest.raises(RingAxiomError):
        validate_ring(add, mul, 0, 0)


def test_constant_diagonal_z4_from_tables():
    # (a b; 0 a) over Z4, elements indexed 4a + b
    idx = [(a, b) for a in range(4) for b in range(4)]
    pos = {p: k for k, p in enumerate(idx)}
    add = [[pos[((a + c) % 4, (b + d) % 4)] for (c, d) in idx] for (a, b) in idx]
    mul = [[pos[((a * c) % 4, (a * d + b * c) % 4)] for (c, d) in idx] for (a, b) in idx]
    R = validate_ring(add, mul, pos[(0, 0)], pos[(1, 0)])
    assert R.order == 16
    assert R.is_commutative


def test_corpus_rings_revalidate(corpus):
    for fx in corpus:
        R = fx.ring
        again = validate_ring(R.add, R.mul, R.zero, R.one, R.name)
        assert again.order == R.order


# --- element sets vs brute force ---------------------------------------------

def test_center_examples(Z4, M2Z2, T2Z2):
    assert len(center(Z4)) == 4
    assert center(M2Z2).labels() == ["[[0,0],[0,0]]", "[[1,0],[0,1]]"]
    assert set(center(T2Z2)) == naive_center(T2Z2)


def test_center_matches_naive(corpus):
    for fx in corpus:
        if fx.ring.order <= 64:
            assert set(center(fx.ring)) == naive_center(fx.ring)


def test_center_is_commutative_unital_subring(corpus):
    for fx in corpus:
        R = fx.ring
        C = center(R)
        assert R.one in C and R.zero in C
        for a in C:
            for b in C:
                assert R.add[a, b] in C and R.mul[a, b] in C
                assert R.mul[a, b] == R.mul[b, a]


def test_z4_idempotents_nilpotents(Z4):
    assert idempotents(Z4) == {0, 1}
    assert nilpotents(Z4) == {0, 2}


def test_units_and_nilpotents_naive(corpus):
    for fx in corpus:
        R = fx.ring
        if R.order > 64:
            continue
        n = R.order
        u = {a for a in range(n) if any(R.mul[a, b] == R.one and R.mul[b, a] == R.one for b in range(n))}
        assert set(units(R)) == u
        nil = set()
        for a in range(n):
            p = a
            for _ in range(n):
                p = int(R.mul[p, a])
            if p == R.zero:
                nil.add(a)
        assert set(nilpotents(R)) == nil
        assert set(idempotents(R)) == {a for a in range(n) if R.mul[a, a] == a}


def test_regular_elements_are_units(corpus):
    for fx in corpus:
        assert set(regular_elements(fx.ring)) <= set(units(fx.ring))
        assert central_regulars_are_units(fx.ring).holds


def test_annihilator_examples(Z4, corpus):
    assert right_annihilator(Z4, {2}) == {0, 2}
    for fx in corpus[:6]:
        R = fx.ring
        assert len(right_annihilator(R, {R.zero})) == R.order
        assert right_annihilator(R, {R.one}) == {R.zero}


def test_annihilators_are_right_ideals(corpus):
    for fx in corpus:
        R = fx.ring
        if R.order > 64:
            continue
        for a in range(R.order):
            assert is_right_ideal(R, right_annihilator(R, {a}))
            L = left_annihilator(R, {a})
            assert all(R.mul[r, x] in L and R.add[x, y] in L for x in L for y in L for r in range(R.order))


def test_principal_right_ideal(T2Z2):
    e11 = T2Z2.element("[[1,0],[0,0]]")
    eR = principal_right_ideal(T2Z2, e11)
    assert set(eR) == {int(T2Z2.mul[e11, r]) for r in range(T2Z2.order)}


# --- ideals and quotients -----------------------------------------------------

def test_quotient_z4_by_2():
    Z4 = zmod(4)
    Q, proj = quotient(Z4, {0, 2})
    assert Q.order == 2
    assert (Q.add == zmod(2).add).all() and (Q.mul == zmod(2).mul).all()


@pytest.mark.parametrize("p", [2, 3])
def test_quotient_t2_by_strict_upper_is_product(p):
    F = zmod(p)
    T = upper_triangular(F, 2)
    I = {a for a in range(T.order) if T.coords.table[a][0] == 0 and T.coords.table[a][2] == 0}
    assert is_ideal(T, I)
    Q, proj = quotient(T, I)
    P = direct_product(F, F).ring
    # coset of (a b; 0 d) -> (a, d); compare tables through this bijection
    phi = np.empty(Q.order, dtype=int)
    for x in range(T.order):
        a, _, d = T.coords.table[x]
        phi[proj.images[x]] = P.coords.index((a, d))
    assert (phi[Q.add] == P.add[phi[:, None], phi[None, :]]).all()
    assert (phi[Q.mul] == P.mul[phi[:, None], phi[None, :]]).all()


def test_projection_is_homomorphism(corpus):
    for fx in corpus:
        R = fx.ring
        if R.order > 27:
            continue
        for I in two_sided_ideals(R):
            if 1 < len(I) < R.order:
                Q, proj = quotient(R, I)
                pi = proj.images
                assert (pi[R.mul] == Q.mul[pi[:, None], pi[None, :]]).all()
                assert (pi[R.add] == Q.add[pi[:, None], pi[None, :]]).all()


def test_quotient_rejects_non_ideal(T2Z2):
    e11 = T2Z2.element("[[1,0],[0,0]]")
    with pytest.raises(ValueError):
        quotient(T2Z2, {T2Z2.zero, e11})


def test_quotient_by_whole_ring_rejected(Z4):
    with pytest.raises(ValueError):
        quotient(Z4, range(4))


def test_two_sided_ideals_brute_force():
    # all additive subgroups closed under both multiplications, by subset enumeration
    for R in (zmod(4), upper_triangular(zmod(2), 2), direct_product(zmod(2), zmod(2)).ring):
        n = R.order
        found = set()
        for mask in range(1, 1 << n):
            S = [a for a in range(n) if mask >> a & 1]
            if R.zero in S and is_ideal(R, S):
                found.add(tuple(S))
        assert {I.members for I in two_sided_ideals(R)} == found


# --- predicates -------------------------------------------------------------------

def test_predicate_examples(Z4, M2Z2, Z2xZ2):
    red = is_reduced(Z4)
    assert red.fails and red.witness.elements["a"] == 2
    ab = is_abelian(M2Z2)
    assert ab.fails
    e = ab.witness.elements["e"]
    assert M2Z2.mul[e, e] == e and not M2Z2.center_mask[e]
    assert is_prime(M2Z2).holds
    assert is_right_pp(gf4()).holds and is_right_pp(zmod(3)).holds
    pp = is_right_pp(Z4)
    assert pp.fails and pp.witness.elements["a"] == 2
    assert is_baer(Z2xZ2).holds


def test_prime_brute_force(corpus):
    for fx in corpus:
        R = fx.ring
        if R.order > 16:
            continue
        n = R.order
        prime = all(a == R.zero or b == R.zero or any(R.mul[R.mul[a, r], b] != R.zero for r in range(n))
                    for a in range(n) for b in range(n))
        semi = all(a == R.zero or any(R.mul[R.mul[a, r], a] != R.zero for r in range(n)) for a in range(n))
        assert is_prime(R).holds == prime
        assert is_semiprime(R).holds == semi


def test_baer_implies_right_pp(corpus):
    for fx in corpus:
        if is_baer(fx.ring).holds:
            assert is_right_pp(fx.ring).holds


def test_baer_against_subset_enumeration():
    for R in (zmod(4), upper_triangular(zmod(2), 2), direct_product(zmod(2), zmod(2)).ring):
        n = R.order
        eR = {tuple(sorted({int(R.mul[e, r]) for r in range(n)})) for e in idempotents(R)}
        ok = True
        for mask in range(1, 1 << n):
            X = [a for a in range(n) if mask >> a & 1]
            ann = tuple(b for b in range(n) if all(R.mul[x, b] == R.zero for x in X))
            ok &= ann in eR
        assert is_baer(R).holds == ok


# --- property-based: relabelling preserves structure -----------------------------

RINGS = [zmod(4), upper_triangular(zmod(2), 2), constant_diagonal_subring(zmod(2), 3), gf4()]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(RINGS), st.randoms(use_true_random=False))
def test_relabel_invariants(R, rnd):
    perm = list(range(R.order))
    rnd.shuffle(perm)
    S, phi = relabel(R, perm)
    assert len(center(S)) == len(center(R))
    assert len(idempotents(S)) == len(idempotents(R))
    assert len(units(S)) == len(units(R))
    assert is_reduced(S).holds == is_reduced(R).holds
    assert is_abelian(S).holds == is_abelian(R).holds
    assert len(two_sided_ideals(S)) == len(two_sided_ideals(R))


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 12))
def test_zmod_axioms(n):
    R = zmod(n)
    assert R.order == n and R.is_commutative
    assert len(units(R)) == sum(1 for a in range(1, n) if np.gcd(a, n) == 1)
