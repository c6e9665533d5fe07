"""Skew polynomials over a finite ring.

Multiplication in ``R[x; alpha]`` follows ``x a = alpha(a) x``, hence

    (f g)_k = sum_{i + j = k} a_i alpha^i(b_j).

With ``alpha`` the identity this is ordinary ``R[x]``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

from .endo import RingMap, identity_map
from .ring import FiniteRing, principal_right_ideal, right_annihilator, idempotents
from .search import DEFAULT_BUDGET, ElementAlgebra, PairScan


def _trim(coeffs, zero: int) -> tuple[int, ...]:
    out = [int(c) for c in coeffs]
    while out and out[-1] == zero:
        out.pop()
    return tuple(out)


@dataclass(frozen=True, eq=False)
class SkewPoly:
    """``coeffs[i]`` is the coefficient of ``x^i``; zero is ``()``."""

    ring: FiniteRing
    twist: RingMap
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs, self.ring.zero))

    @classmethod
    def constant(cls, ring, twist, a: int) -> "SkewPoly":
        return cls(ring, twist, (a,))

    @classmethod
    def x(cls, ring, twist) -> "SkewPoly":
        return cls(ring, twist, (ring.zero, ring.one))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if i < len(self.coeffs) else self.ring.zero

    def padded(self, degree: int) -> tuple[int, ...]:
        return tuple(self.coeff(i) for i in range(degree + 1))

    def _check(self, other: "SkewPoly") -> None:
        if self.ring is not other.ring or not self.twist.same_as(other.twist):
            raise ValueError("polynomials live in different skew polynomial rings")

    def __eq__(self, other) -> bool:
        if not isinstance(other, SkewPoly):
            return NotImplemented
        return self.ring is other.ring and self.twist.same_as(other.twist) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((id(self.ring), self.coeffs))

    def __add__(self, other: "SkewPoly") -> "SkewPoly":
        return add(self, other)

    def __neg__(self) -> "SkewPoly":
        return SkewPoly(self.ring, self.twist, tuple(int(self.ring.neg[c]) for c in self.coeffs))

    def __sub__(self, other: "SkewPoly") -> "SkewPoly":
        return add(self, -other)

    def __mul__(self, other: "SkewPoly") -> "SkewPoly":
        return skew_mul(self, other)

    def __repr__(self) -> str:
        return f"SkewPoly({self.ring.name}, {self.to_str()})"

    def to_str(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == self.ring.zero:
                continue
            lab = self.ring.label(c)
            terms.append(lab if i == 0 else f"{lab}*x" if i == 1 else f"{lab}*x^{i}")
        return " + ".join(terms)


def add(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    f._check(g)
    d = max(f.degree, g.degree)
    R = f.ring
    return SkewPoly(R, f.twist, tuple(int(R.add[f.coeff(i), g.coeff(i)]) for i in range(d + 1)))


def skew_mul(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    f._check(g)
    R, alpha = f.ring, f.twist
    if f.is_zero() or g.is_zero():
        return SkewPoly(R, alpha, ())
    out = [R.zero] * (f.degree + g.degree + 1)
    for i, a in enumerate(f.coeffs):
        ai = alpha.power_table(i)
        for j, b in enumerate(g.coeffs):
            out[i + j] = R.add[out[i + j], R.mul[a, ai[b]]]
    return SkewPoly(R, alpha, tuple(out))


def apply_twist_to_poly(f: SkewPoly) -> SkewPoly:
    """Coefficientwise image ``alpha(f)``."""
    return SkewPoly(f.ring, f.twist, tuple(int(f.twist.images[c]) for c in f.coeffs))


@dataclass(frozen=True, eq=False)
class ZeroPair:
    f: SkewPoly
    g: SkewPoly

    @cached_property
    def products(self) -> dict:
        """``(i, j) -> a_i alpha^i(b_j)`` for ``i <= deg f``, ``j <= deg g``."""
        R, alpha = self.f.ring, self.f.twist
        return {
            (i, j): int(R.mul[a, alpha.power_table(i)[b]])
            for i, a in enumerate(self.f.coeffs)
            for j, b in enumerate(self.g.coeffs)
        }


class ZeroPairScan:
    """Stream of every ``(f, g)`` with ``f, g`` nonzero, ``deg f <= d_f``,
    ``deg g <= d_g`` and ``f g = 0``, each once and in a fixed order.

    After iteration ``status`` is ``"exhausted"`` or ``"budget-hit"`` and
    ``visited`` counts examined pair candidates (prefix nodes for DFS).
    """

    def __init__(self, ring: FiniteRing, twist: RingMap | None, d_f: int, d_g: int,
                 strategy: str = "dfs", budget: int = DEFAULT_BUDGET, jobs: int = 1):
        self.ring = ring
        self.twist = twist if twist is not None else identity_map(ring)
        self._scan = PairScan(ElementAlgebra(ring, self.twist), d_f, d_g, strategy, budget, jobs)
        self.status: str | None = None
        self.visited = 0

    def arrays(self) -> Iterator[tuple[np.ndarray, np.ndarray]]:
        """Raw ``(F, G)`` coefficient arrays, one batch per chunk."""
        self.visited = 0
        self.status = "exhausted"
        for ch in self._scan.chunks(collect=True):
            self.visited += ch.visited
            if len(ch.F):
                yield ch.F, ch.G
            if self.visited > self._scan.budget and ch.hi < self._scan.f_count:
                self.status = "budget-hit"
                return

    def __iter__(self) -> Iterator[ZeroPair]:
        R, alpha = self.ring, self.twist
        for F, G in self.arrays():
            for frow, grow in zip(F, G):
                yield ZeroPair(SkewPoly(R, alpha, tuple(frow)), SkewPoly(R, alpha, tuple(grow)))


def enumerate_zero_pairs(ring: FiniteRing, twist: RingMap | None, d_f: int, d_g: int | None = None,
                         strategy: str = "dfs", budget: int = DEFAULT_BUDGET, jobs: int = 1) -> ZeroPairScan:
    return ZeroPairScan(ring, twist, d_f, d_f if d_g is None else d_g, strategy, budget, jobs)


def enumerate_idempotent_polys(ring: FiniteRing, twist: RingMap, d: int) -> list[SkewPoly]:
    """All ``e`` with ``e e = e`` and ``deg e <= d``, in lexicographic order.

    Coefficient ``k <= d`` of ``e e`` depends only on ``e_0..e_k``, so
    prefixes are extended one coefficient at a time and pruned on the
    equation ``(e e)_k = e_k``; coefficients above ``d`` must vanish.
    """
    R, n = ring, ring.order
    cand = np.arange(n)
    rows = np.empty((1, 0), dtype=np.intp)
    for k in range(d + 1):
        r = np.repeat(rows, n, axis=0)
        b = np.tile(cand, len(rows))
        full = np.column_stack([r, b])
        acc = np.full(len(full), R.zero, dtype=np.intp)
        for i in range(k + 1):
            acc = R.add[acc, R.mul[full[:, i], twist.power_table(i)[full[:, k - i]]]]
        rows = full[acc == full[:, k]]
    keep = np.ones(len(rows), dtype=bool)
    for c in range(d + 1, 2 * d + 1):
        acc = np.full(len(rows), R.zero, dtype=np.intp)
        for i in range(c - d, d + 1):
            acc = R.add[acc, R.mul[rows[:, i], twist.power_table(i)[rows[:, c - i]]]]
        keep &= acc == R.zero
    return [SkewPoly(R, twist, tuple(row)) for row in rows[keep]]


@dataclass(frozen=True)
class PolyAnnihilator:
    """Right annihilator of a constant inside polynomials of degree ``<= d``."""

    polys: tuple[SkewPoly, ...]
    generator: int | None  # idempotent e with the set equal to {e h}, if any

    @property
    def idempotent_generated(self) -> bool:
        return self.generator is not None


def poly_right_annihilator_of_constant(ring: FiniteRing, twist: RingMap, a: int, d: int) -> PolyAnnihilator:
    """Every ``g`` of degree ``<= d`` with ``a g = 0``, found by direct
    enumeration, and whether that set equals ``{e h : deg h <= d}`` for a
    constant idempotent ``e``."""
    R = ring
    found = []
    for coeffs in itertools.product(range(R.order), repeat=d + 1):
        if all(R.mul[a, b] == R.zero for b in coeffs):
            found.append(SkewPoly(R, twist, coeffs))
    target = {p.padded(d) for p in found}
    generator = None
    for e in idempotents(R):
        eR = principal_right_ideal(R, e).members
        if len(eR) ** (d + 1) != len(target):
            continue
        if {tuple(int(R.mul[e, h]) for h in hs) for hs in itertools.product(eR, repeat=d + 1)} == target:
            generator = e
            break
    return PolyAnnihilator(tuple(found), generator)


def annihilator_generated_by_idempotent(ring: FiniteRing, a: int) -> int | None:
    """Idempotent ``e`` with ``r(a) = eR`` (the constant-coefficient shortcut)."""
    ra = right_annihilator(ring, {a}).mask
    for e in idempotents(ring):
        if (principal_right_ideal(ring, e).mask == ra).all():
            return e
    return None

