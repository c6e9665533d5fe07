"""Armendariz-type predicates.

Each polynomial-quantified predicate scans the zero-product pairs up to a
degree bound and can therefore only ever report ``holds-up-to-bound`` (or
``holds-up-to-budget`` when the scan budget runs out first); a failure comes
with the first refuting pair in enumeration order.
"""

from __future__ import annotations

import time
from typing import Callable, Sequence

from . import endo, ring as ringmod
from .endo import RingMap, identity_map, map_order
from .report import (FAILS, HOLDS_UP_TO_BOUND, HOLDS_UP_TO_BUDGET, PropertyReport,
                     ZeroPairWitness)
from .ring import FiniteRing
from .search import DEFAULT_BUDGET, ElementAlgebra, PairScan, PolyAlgebra, decode_rows, first_violation
from .skewpoly import SkewPoly, skew_mul


def _scan_report(prop: str, ring: FiniteRing, twist: RingMap, alg, d_f: int, d_g: int, test: str,
                 strategy: str, budget: int, jobs: int) -> PropertyReport:
    start = time.perf_counter()
    scan = PairScan(alg, d_f, d_g, strategy, budget, jobs)
    res = scan.run(first_violation(alg, test))
    report = PropertyReport(prop, ring.name, twist.name, HOLDS_UP_TO_BOUND, (d_f, d_g),
                            pairs_examined=res.visited, zero_pairs=res.zero_pairs)
    if res.violation is not None:
        frow, grow, i, j, value = res.violation
        report.verdict = FAILS
        report.witness = ZeroPairWitness(alg.trim(frow), alg.trim(grow), i, j, alg.value(value))
    elif res.status == "budget-hit":
        report.verdict = HOLDS_UP_TO_BUDGET
        report.status = "budget-hit"
        report.frontier = [alg.coefficient(c) for c in decode_rows(alg.size, d_f, res.frontier, res.frontier + 1)[0]]
    report.elapsed = time.perf_counter() - start
    return report


def is_armendariz(ring: FiniteRing, degree: int = 2, *, degree_g: int | None = None,
                  strategy: str = "dfs", budget: int = DEFAULT_BUDGET, jobs: int = 1) -> PropertyReport:
    """``f g = 0`` in ``R[x]`` forces every ``a_i b_j = 0``."""
    alpha = identity_map(ring)
    d_g = degree if degree_g is None else degree_g
    return _scan_report("armendariz", ring, alpha, ElementAlgebra(ring, alpha), degree, d_g, "zero",
                        strategy, budget, jobs)


def is_central_armendariz(ring: FiniteRing, degree: int = 2, *, degree_g: int | None = None,
                          strategy: str = "dfs", budget: int = DEFAULT_BUDGET, jobs: int = 1) -> PropertyReport:
    """``f g = 0`` in ``R[x]`` forces every ``a_i b_j`` into the center."""
    alpha = identity_map(ring)
    d_g = degree if degree_g is None else degree_g
    return _scan_report("central-armendariz", ring, alpha, ElementAlgebra(ring, alpha), degree, d_g,
                        "central", strategy, budget, jobs)


def is_skew_armendariz(ring: FiniteRing, twist: RingMap, degree: int = 2, *, degree_g: int | None = None,
                       strategy: str = "dfs", budget: int = DEFAULT_BUDGET, jobs: int = 1) -> PropertyReport:
    """``f g = 0`` in ``R[x; alpha]`` forces every ``a_i alpha^i(b_j) = 0``."""
    d_g = degree if degree_g is None else degree_g
    return _scan_report("skew-armendariz", ring, twist, ElementAlgebra(ring, twist), degree, d_g, "zero",
                        strategy, budget, jobs)


def is_central_skew_armendariz(ring: FiniteRing, twist: RingMap, degree: int = 2, *,
                               degree_g: int | None = None, strategy: str = "dfs",
                               budget: int = DEFAULT_BUDGET, jobs: int = 1) -> PropertyReport:
    """``f g = 0`` in ``R[x; alpha]`` forces every ``a_i alpha^i(b_j)`` into ``C(R)``."""
    d_g = degree if degree_g is None else degree_g
    return _scan_report("central-skew-armendariz", ring, twist, ElementAlgebra(ring, twist), degree, d_g,
                        "central", strategy, budget, jobs)


def is_central_skew_armendariz_over_polyring(ring: FiniteRing, twist: RingMap, d_x: int = 1, d_y: int = 1, *,
                                             strategy: str = "dfs", budget: int = DEFAULT_BUDGET,
                                             jobs: int = 1) -> PropertyReport:
    """Same predicate for ``R[x]`` in place of ``R``: pairs ``p, q`` in
    ``R[x][y; alpha]`` with ``x``-degree ``<= d_x`` and ``y``-degree ``<= d_y``.

    A polynomial is central in ``R[x]`` exactly when all its coefficients are
    central in ``R``, which is what the products are tested against.
    """
    if map_order(twist) is None:
        raise ValueError("the twist must have finite order (alpha^t = id for some t)")
    report = _scan_report("central-skew-armendariz[x]", ring, twist, PolyAlgebra(ring, twist, d_x),
                          d_y, d_y, "central", strategy, budget, jobs)
    report.degree_bound = (d_y, d_y)
    return report


# ---------------------------------------------------------------------------
# degree packing


def _deg(coeffs: Sequence[int], zero: int) -> int:
    d = len(coeffs) - 1
    while d > 0 and coeffs[d] == zero:
        d -= 1
    return max(d, 0)


def degree_pack(ring: FiniteRing, twist: RingMap, polys: Sequence[Sequence[int]], t: int, k: int) -> SkewPoly:
    """Pack ``f_0, ..., f_m`` in ``R[x]`` into one polynomial of ``R[x; alpha]``:

        f_0(x^t) + f_1(x^t) x^(tk+1) + ... + f_m(x^t) x^(m(tk+1)).

    ``k`` must be at least the sum of the degrees of the ``f_i`` (zero
    polynomials count as degree 0) so that the blocks do not overlap.
    """
    if t < 1:
        raise ValueError("t must be positive")
    total = sum(_deg(list(f) or [ring.zero], ring.zero) for f in polys)
    if k < total:
        raise ValueError(f"k = {k} is smaller than the degree sum {total}")
    step = t * k + 1
    length = (len(polys) - 1) * step + t * k + 1 if polys else 0
    out = [ring.zero] * max(length, 1)
    for i, f in enumerate(polys):
        for u, c in enumerate(f):
            if c != ring.zero:
                out[i * step + t * u] = int(c)
    return SkewPoly(ring, twist, tuple(out))


def polyring_mul(ring: FiniteRing, twist: RingMap, p: Sequence[Sequence[int]], q: Sequence[Sequence[int]]) -> list:
    """Product in ``R[x][y; alpha]`` (``x`` central, ``y a = alpha(a) y``),
    computed by plain loops; used to re-check polynomial-ring witnesses."""
    def rx_mul(f, g):
        out = [ring.zero] * max(len(f) + len(g) - 1, 1)
        for u, a in enumerate(f):
            for v, b in enumerate(g):
                out[u + v] = int(ring.add[out[u + v], ring.mul[a, b]])
        return out

    def rx_add(f, g):
        n = max(len(f), len(g))
        f = list(f) + [ring.zero] * (n - len(f))
        g = list(g) + [ring.zero] * (n - len(g))
        return [int(ring.add[a, b]) for a, b in zip(f, g)]

    out = [[ring.zero] for _ in range(max(len(p) + len(q) - 1, 1))]
    for i, f in enumerate(p):
        for j, g in enumerate(q):
            tg = [int(twist.power_table(i)[b]) for b in g]
            out[i + j] = rx_add(out[i + j], rx_mul(list(f) or [ring.zero], tg or [ring.zero]))
    return out


def recheck_witness(report: PropertyReport, ring: FiniteRing, twist: RingMap) -> bool:
    """Independently confirm a failure witness: re-multiply ``f`` by ``g``
    and test the flagged product against the predicate."""
    w = report.witness
    if w is None:
        return False
    central = "central" in report.property
    if report.property.endswith("[x]"):
        prod = polyring_mul(ring, twist, w.f, w.g)
        if any(c != ring.zero for block in prod for c in block):
            return False
        f_i = list(w.f[w.i]) or [ring.zero]
        g_j = [int(twist.power_table(w.i)[b]) for b in (list(w.g[w.j]) or [ring.zero])]
        value = polyring_mul(ring, identity_map(ring), [f_i], [g_j])[0]
        while len(value) > 1 and value[-1] == ring.zero:
            value.pop()
        if value != (list(w.product) or [ring.zero]):
            return False
        return not all(ring.center_mask[c] for c in value)
    alpha = twist if report.property in ("skew-armendariz", "central-skew-armendariz") else identity_map(ring)
    f = SkewPoly(ring, alpha, tuple(w.f))
    g = SkewPoly(ring, alpha, tuple(w.g))
    if f.is_zero() or g.is_zero() or not skew_mul(f, g).is_zero():
        return False
    value = int(ring.mul[f.coeffs[w.i], alpha.power_table(w.i)[g.coeffs[w.j]]])
    if value != w.product:
        return False
    return not ring.center_mask[value] if central else value != ring.zero


# ---------------------------------------------------------------------------
# registry


def _element(fn: Callable, with_twist: bool):
    def run(ring, twist, degree=None, **_):
        return fn(ring, twist) if with_twist else fn(ring)
    return run


def _poly(fn: Callable, with_twist: bool):
    def run(ring, twist, degree=2, **opts):
        return fn(ring, twist, degree, **opts) if with_twist else fn(ring, degree, **opts)
    return run


def _polyring(ring, twist, degree=1, **opts):
    return is_central_skew_armendariz_over_polyring(ring, twist, 1, degree, **opts)


PROPERTIES: dict[str, Callable[..., PropertyReport]] = {
    "armendariz": _poly(is_armendariz, False),
    "central-armendariz": _poly(is_central_armendariz, False),
    "skew-armendariz": _poly(is_skew_armendariz, True),
    "central-skew-armendariz": _poly(is_central_skew_armendariz, True),
    "central-skew-armendariz[x]": _polyring,
    "commutative": _element(ringmod.is_commutative, False),
    "reduced": _element(ringmod.is_reduced, False),
    "abelian": _element(ringmod.is_abelian, False),
    "prime": _element(ringmod.is_prime, False),
    "semiprime": _element(ringmod.is_semiprime, False),
    "right-pp": _element(ringmod.is_right_pp, False),
    "baer": _element(ringmod.is_baer, False),
    "rigid": _element(endo.is_rigid, True),
    "compatible": _element(endo.is_compatible, True),
    "fixes-idempotents": _element(endo.fixes_idempotents, True),
    "injective": _element(endo.is_injective, True),
    "central-regular-units": _element(ringmod.central_regulars_are_units, False),
}

POLYNOMIAL_PROPERTIES = ("armendariz", "central-armendariz", "skew-armendariz", "central-skew-armendariz",
                         "central-skew-armendariz[x]")


def check_property(name: str, ring: FiniteRing, twist: RingMap | None = None, degree: int = 2,
                   **opts) -> PropertyReport:
    """Run a predicate by name; ``opts`` are scan options (strategy, budget, jobs)."""
    try:
        fn = PROPERTIES[name]
    except KeyError:
        raise ValueError(f"unknown property {name!r}; known: {', '.join(PROPERTIES)}") from None
    twist = twist if twist is not None else identity_map(ring)
    start = time.perf_counter()
    report = fn(ring, twist, degree, **opts)
    if name not in POLYNOMIAL_PROPERTIES:
        report.elapsed = time.perf_counter() - start
    return report
