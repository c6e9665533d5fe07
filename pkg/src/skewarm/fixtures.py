"""Named (ring, twist) fixtures and the default corpus.

A fixture carries its expected verdicts plus a few explicit claims (a
concrete zero pair and the coefficient product it exhibits, an idempotent
moved by the twist, quotients that are skew Armendariz).  ``expected``
verdicts use the coarse vocabulary ``holds`` / ``fails``: a polynomial
predicate "holds" when it reports ``holds-up-to-bound``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from . import constructions as C
from .endo import RingMap, identity_map, induced_quotient_map, map_order
from .properties import check_property
from .report import FAILS, HOLDS_EXHAUSTIVELY, HOLDS_UP_TO_BOUND
from .ring import ElementSet, FiniteRing, is_ideal
from .skewpoly import SkewPoly, skew_mul


def verdict_matches(expected: str, verdict: str) -> bool:
    if expected == "fails":
        return verdict == FAILS
    if expected == "holds":
        return verdict in (HOLDS_EXHAUSTIVELY, HOLDS_UP_TO_BOUND)
    raise ValueError(f"expected verdict must be 'holds' or 'fails', got {expected!r}")


@dataclass(frozen=True)
class ClaimResult:
    label: str
    ok: bool
    detail: str


@dataclass(frozen=True)
class PairClaim:
    """``f g = 0`` and the product ``a_i alpha^i(b_j)`` equals ``product``,
    which is nonzero (``test="nonzero"``) or outside the center
    (``test="noncentral"``)."""

    label: str
    f: tuple
    g: tuple
    i: int
    j: int
    product: int
    test: str = "nonzero"

    def run(self, fx: "Fixture", **_) -> ClaimResult:
        R, alpha = fx.ring, fx.twist
        f, g = SkewPoly(R, alpha, self.f), SkewPoly(R, alpha, self.g)
        fg = skew_mul(f, g)
        value = int(R.mul[f.coeff(self.i), alpha.power_table(self.i)[g.coeff(self.j)]])
        bad = value != R.zero if self.test == "nonzero" else not R.center_mask[value]
        ok = fg.is_zero() and value == self.product and bad
        detail = (f"f = {f.to_str()}, g = {g.to_str()}, fg = {fg.to_str()}, "
                  f"a_{self.i} alpha^{self.i}(b_{self.j}) = {R.label(value)}")
        return ClaimResult(self.label, ok, detail)


@dataclass(frozen=True)
class MovedIdempotentClaim:
    label: str
    e: int

    def run(self, fx: "Fixture", **_) -> ClaimResult:
        R, alpha = fx.ring, fx.twist
        e = self.e
        image = int(alpha.images[e])
        ok = bool(R.idempotent_mask[e]) and image != e
        return ClaimResult(self.label, ok, f"e = {R.label(e)}, alpha(e) = {R.label(image)}")


@dataclass(frozen=True)
class QuotientClaim:
    """``R/I`` with the induced twist has ``prop`` with verdict ``expected``."""

    label: str
    ideal: Callable[[tuple], bool]  # membership test on coordinates
    prop: str = "skew-armendariz"
    expected: str = "holds"

    def run(self, fx: "Fixture", degree: int = 1, **opts) -> ClaimResult:
        R = fx.ring
        members = [a for a, row in enumerate(R.coords.table) if self.ideal(tuple(int(v) for v in row))]
        if not is_ideal(R, members):
            return ClaimResult(self.label, False, "not a two-sided ideal")
        Q, abar, _ = induced_quotient_map(R, members, fx.twist)
        report = check_property(self.prop, Q, abar, degree, **opts)
        ok = verdict_matches(self.expected, report.verdict)
        return ClaimResult(self.label, ok, f"|I| = {len(members)}, |R/I| = {Q.order}: {report.verdict}")


@dataclass(frozen=True)
class ElementClaim:
    """An element-level property of a ring derived from the fixture."""

    label: str
    build: Callable[[], tuple]  # -> (ring, twist or None)
    prop: str
    expected: str

    def run(self, fx: "Fixture", **_) -> ClaimResult:
        ring, twist = self.build()
        report = check_property(self.prop, ring, twist)
        return ClaimResult(self.label, verdict_matches(self.expected, report.verdict),
                           f"{self.prop} on {ring.name}: {report.verdict}")


@dataclass(frozen=True)
class Fixture:
    id: str
    ring: FiniteRing
    twist: RingMap
    provenance: str
    expected: tuple = ()  # (property, "holds" | "fails")
    claims: tuple = ()
    factors: tuple | None = None  # ((R1, a1), (R2, a2)) for componentwise twists

    @property
    def degree(self) -> int:
        """Default degree bound: 2 up to order 16, 1 above."""
        return 2 if self.ring.order <= 16 else 1

    @property
    def twist_order(self) -> int | None:
        return map_order(self.twist)


# ---------------------------------------------------------------------------
# catalog


def _ex1() -> Fixture:
    Z2 = C.zmod(2)
    R = C.direct_product(Z2, Z2, "Z2xZ2").ring
    alpha = C.swap_automorphism(R)
    e1, e2 = R.coords.index((1, 0)), R.coords.index((0, 1))
    neg = R.neg
    return Fixture(
        "EX1-swap", R, alpha,
        "commutative direct sum with the coordinate swap",
        (("skew-armendariz", "fails"), ("central-skew-armendariz", "holds"), ("commutative", "holds")),
        (PairClaim("(1,0) - (1,0)x times (0,1) + (1,0)x", (e1, int(neg[e1])), (e2, e1), 1, 0, e1),),
    )


def _ex2() -> Fixture:
    Z4 = C.zmod(4)
    R = C.constant_diagonal_subring(Z4, 2)
    alpha = C.negate_coordinates(R, [1], "neg-b")
    a = R.coords.index((2, 0))
    b = R.coords.index((2, 1))
    return Fixture(
        "EX2-z4mat", R, alpha,
        "(a b; 0 a) over Z4 with b -> -b",
        (("skew-armendariz", "fails"), ("central-skew-armendariz", "holds"), ("commutative", "holds")),
        (PairClaim("((2 0;0 2) + (2 1;0 2)x)^2", (a, b), (a, b), 1, 0, R.coords.index((0, 2))),),
    )


def _ex3() -> Fixture:
    Z2 = C.zmod(2)
    P = C.direct_product(Z2, Z2, "Z2xZ2").ring
    R = C.diagonal_ring(P, 2)
    alpha = C.coordinate_map(R, lambda row: (row[1], row[0]), "swap-diag")
    e = R.coords.index((P.coords.index((1, 0)), P.coords.index((0, 1))))
    return Fixture(
        "EX3-diag-swap", R, alpha,
        "diagonal matrices over Z2xZ2 with the diagonal swap",
        (("fixes-idempotents", "fails"), ("central-skew-armendariz", "holds"), ("commutative", "holds")),
        (MovedIdempotentClaim("diag((1,0),(0,1)) is moved", e),),
    )


def _ex4() -> Fixture:
    Z4 = C.zmod(4)
    T, alpha = C.trivial_extension(Z4)
    return Fixture(
        "EX4-T4z4", T, alpha,
        "trivial extension T(Z4, Z4), identity twist",
        (("commutative", "holds"), ("central-skew-armendariz", "holds")),
        (ElementClaim("Z4 is not rigid", lambda: (Z4, identity_map(Z4)), "rigid", "fails"),
         ElementClaim("Z4 is not reduced", lambda: (Z4, None), "reduced", "fails")),
    )


def _ex5(p: int) -> Fixture:
    F = C.zmod(p)
    R = C.upper_triangular(F, 2)
    alpha = C.negate_coordinates(R, [1], "neg-b")
    ix = R.coords.index
    neg1 = int(F.neg[1])
    pair = PairClaim(
        "e11 + (e11+e12)x times -e22 + (e12+e22)x",
        (ix((1, 0, 0)), ix((1, 1, 0))), (ix((0, 0, neg1)), ix((0, 1, 1))), 1, 0, ix((0, neg1, 0)),
        "noncentral",
    )
    quotients = (
        QuotientClaim("R/(F F;0 0) is skew Armendariz", lambda r: r[2] == 0),
        QuotientClaim("R/(0 F;0 F) is skew Armendariz", lambda r: r[0] == 0),
        QuotientClaim("R/(0 F;0 0) is skew Armendariz", lambda r: r[0] == 0 and r[2] == 0),
    )
    expected = [("central-skew-armendariz", "fails"), ("abelian", "fails")]
    if p == 2:
        expected.append(("central-armendariz", "fails"))
    return Fixture(
        f"EX5-T2F{p}", R, alpha,
        f"T2(Z{p}) with (a b; 0 c) -> (a -b; 0 c)",
        tuple(expected), (pair,) + quotients,
    )


def _m2z2() -> Fixture:
    R = C.matrix_ring(C.zmod(2), 2)
    return Fixture("M2Z2", R, identity_map(R), "full matrix ring M2(Z2)",
                   (("abelian", "fails"), ("central-armendariz", "fails"),
                    ("central-skew-armendariz", "fails"), ("prime", "holds")))


def _t2z2() -> Fixture:
    R = C.upper_triangular(C.zmod(2), 2)
    return Fixture("T2Z2", R, identity_map(R), "upper triangular T2(Z2)",
                   (("abelian", "fails"), ("armendariz", "fails"), ("central-armendariz", "fails"),
                    ("central-skew-armendariz", "fails")))


def _u3z2() -> Fixture:
    R = C.constant_diagonal_subring(C.zmod(2), 3)
    return Fixture("U3Z2", R, identity_map(R), "(a b c; 0 a d; 0 0 a) over Z2",
                   (("skew-armendariz", "holds"), ("central-skew-armendariz", "holds")))


def _z4() -> Fixture:
    R = C.zmod(4)
    return Fixture("Z4", R, identity_map(R), "integers modulo 4",
                   (("reduced", "fails"), ("rigid", "fails"), ("central-skew-armendariz", "holds")))


_CATALOG: dict[str, Callable[[], Fixture]] = {
    "EX1-swap": _ex1,
    "EX2-z4mat": _ex2,
    "EX3-diag-swap": _ex3,
    "EX4-T4z4": _ex4,
    "EX5-T2F2": lambda: _ex5(2),
    "EX5-T2F3": lambda: _ex5(3),
    "M2Z2": _m2z2,
    "T2Z2": _t2z2,
    "U3Z2": _u3z2,
    "Z4": _z4,
}

_cache: dict[str, Fixture] = {}


def fixture_ids() -> list[str]:
    return list(_CATALOG)


def paper_fixture(fid: str) -> Fixture:
    """Catalog fixture by id (built once, then cached)."""
    if fid not in _CATALOG:
        raise KeyError(f"unknown fixture {fid!r}; known: {', '.join(_CATALOG)}")
    if fid not in _cache:
        _cache[fid] = _CATALOG[fid]()
    return _cache[fid]


# ---------------------------------------------------------------------------
# extra corpus entries


def _simple(fid: str, R: FiniteRing, alpha: RingMap | None, text: str, factors=None) -> Fixture:
    return Fixture(fid, R, alpha if alpha is not None else identity_map(R), text, factors=factors)


def _product(fid: str, R1, a1, R2, a2, text: str) -> Fixture:
    P = C.direct_product(R1, R2).ring
    return _simple(fid, P, C.product_map(P, a1, a2), text, ((R1, a1), (R2, a2)))


def extra_entries() -> list[Fixture]:
    Z2, Z3 = C.zmod(2), C.zmod(3)
    F4 = C.gf4()
    frob = C.frobenius(F4)
    T2 = C.upper_triangular(Z2, 2)
    Z3Z3 = C.direct_product(Z3, Z3).ring
    TF4, frob_bar = C.trivial_extension(F4, frob)
    return [
        _simple("Z2", Z2, None, "field Z2"),
        _simple("Z3", Z3, None, "field Z3"),
        _simple("GF4-frob", F4, frob, "GF(4) with the Frobenius automorphism"),
        _product("Z2xZ2-id", Z2, identity_map(Z2), Z2, identity_map(Z2), "Z2 x Z2, identity twist"),
        _product("Z2xGF4", Z2, identity_map(Z2), F4, frob, "Z2 x GF(4), (id, Frobenius)"),
        _product("Z2xT2Z2", Z2, identity_map(Z2), T2, identity_map(T2), "Z2 x T2(Z2), identity twist"),
        _simple("Z3xZ3-swap", Z3Z3, C.swap_automorphism(Z3Z3), "Z3 x Z3 with the swap"),
        _simple("T(Z2,Z2)", C.trivial_extension(Z2)[0], None, "trivial extension of Z2"),
        _simple("T(GF4)-frob", TF4, frob_bar, "trivial extension of GF(4), Frobenius on both parts"),
        _simple("Z2[x]/x^3", C.truncated_polynomial_ring(Z2, 3), None, "truncated polynomials over Z2"),
    ]


def default_corpus() -> list[Fixture]:
    """Catalog fixtures followed by the extra entries, in a fixed order."""
    return [paper_fixture(fid) for fid in _CATALOG] + extra_entries()
