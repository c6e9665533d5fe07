"""Zero-product pair enumeration kernels.

A polynomial ``f = a_0 + a_1 x + ... + a_d x^d`` is stored as the row
``(a_0, ..., a_d)`` of coefficient indices.  Candidate polynomials are
ordered lexicographically on that row (``a_0`` most significant); the
``f`` space is the outer loop and ``g`` the inner one, so both strategies
produce pairs in the same order.

Coefficients live in a *coefficient algebra*: either the ring itself or,
for the polynomial-ring variant, bounded-degree polynomials over it.  The
algebra supplies the twisted product ``a * alpha^i(b)`` vectorized over
index arrays.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterator

import numpy as np

from .endo import RingMap
from .ring import FiniteRing

DEFAULT_BUDGET = 10**8
STRATEGIES = ("dfs", "exhaustive")

# rows x candidates materialized at once by one DFS expansion step
_CELL_LIMIT = 1 << 18
_DFS_CHUNK = 256
_EXHAUSTIVE_CHUNK_WORK = 1 << 20


class ElementAlgebra:
    """Coefficients are ring elements; products stay in the ring."""

    width = 1

    def __init__(self, ring: FiniteRing, twist: RingMap):
        self.ring = ring
        self.twist = twist
        self.size = ring.order
        self.zero_index = ring.zero

    def times(self, i: int, A, B) -> np.ndarray:
        B = np.asarray(B)
        if i:
            B = self.twist.power_table(i)[B]
        return self.ring.mul[A, B][:, None]

    def plus(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        return self.ring.add[u, v]

    def zeros(self, k: int) -> np.ndarray:
        return np.full((k, 1), self.ring.zero, dtype=np.intp)

    def is_zero(self, values: np.ndarray) -> np.ndarray:
        return (values == self.ring.zero).all(axis=-1)

    def is_central(self, values: np.ndarray) -> np.ndarray:
        return self.ring.center_mask[values].all(axis=-1)

    def coefficient(self, idx):
        return int(idx)

    def value(self, v):
        return int(v[0])

    def trim(self, row) -> tuple:
        row = [int(c) for c in row]
        while row and row[-1] == self.zero_index:
            row.pop()
        return tuple(row)


class PolyAlgebra:
    """Coefficients are polynomials of degree <= ``dx`` in an untwisted
    variable over the ring; the twist acts coefficientwise.  A coefficient
    index ``c`` encodes ``sum_u digit_u(c) x^u`` in little-endian base
    ``|R|``.  Products are kept exactly (degree up to ``2 dx``)."""

    def __init__(self, ring: FiniteRing, twist: RingMap, dx: int):
        self.ring = ring
        self.twist = twist
        self.dx = dx
        n = ring.order
        self.size = n ** (dx + 1)
        self.width = 2 * dx + 1
        self.zero_index = sum(ring.zero * n**u for u in range(dx + 1))

    @cached_property
    def digits(self) -> np.ndarray:
        n = self.ring.order
        idx = np.arange(self.size)
        return np.stack([(idx // n**u) % n for u in range(self.dx + 1)], axis=1)

    def times(self, i: int, A, B) -> np.ndarray:
        Ad = self.digits[A]
        Bd = self.digits[B]
        if i:
            Bd = self.twist.power_table(i)[Bd]
        out = self.zeros(len(Ad))
        for u in range(self.dx + 1):
            for v in range(self.dx + 1):
                out[:, u + v] = self.ring.add[out[:, u + v], self.ring.mul[Ad[:, u], Bd[:, v]]]
        return out

    def plus(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        return self.ring.add[u, v]

    def zeros(self, k: int) -> np.ndarray:
        return np.full((k, self.width), self.ring.zero, dtype=np.intp)

    def is_zero(self, values: np.ndarray) -> np.ndarray:
        return (values == self.ring.zero).all(axis=-1)

    def is_central(self, values: np.ndarray) -> np.ndarray:
        # central in R[x] iff every coefficient is central in R
        return self.ring.center_mask[values].all(axis=-1)

    def _trim_poly(self, coeffs) -> list:
        coeffs = [int(c) for c in coeffs]
        while coeffs and coeffs[-1] == self.ring.zero:
            coeffs.pop()
        return coeffs

    def coefficient(self, idx) -> list:
        return self._trim_poly(self.digits[int(idx)])

    def value(self, v) -> list:
        return self._trim_poly(v)

    def trim(self, row) -> tuple:
        row = [int(c) for c in row]
        while row and row[-1] == self.zero_index:
            row.pop()
        return tuple(self.coefficient(c) for c in row)


# ---------------------------------------------------------------------------
# polynomial rows


def decode_rows(size: int, degree: int, lo: int, hi: int) -> np.ndarray:
    """Rows for candidate numbers ``lo..hi-1`` with ``a_0`` most significant."""
    u = np.arange(lo, hi, dtype=np.int64)
    cols = [(u // size ** (degree - k)) % size for k in range(degree + 1)]
    return np.stack(cols, axis=1).astype(np.intp)


def _nonzero(alg, rows: np.ndarray) -> np.ndarray:
    return rows[(rows != alg.zero_index).any(axis=1)]


def dfs_pairs(alg, F: np.ndarray, d_g: int, counter: list) -> Iterator[tuple]:
    """Depth-first over ``g``'s coefficients ``b_0, b_1, ...``.

    Once ``b_0..b_k`` are fixed, coefficient ``k`` of ``fg`` is determined,
    so any prefix making it nonzero is cut.  Yields ``(F_rows, G)`` batches
    in lexicographic pair order; ``counter[0]`` accumulates visited nodes.
    """
    N = alg.size
    d_f = F.shape[1] - 1
    cand = np.arange(N, dtype=np.intp)
    step = max(1, _CELL_LIMIT // N)

    def finish(rows, G):
        keep = (G != alg.zero_index).any(axis=1)
        for c in range(d_g + 1, d_f + d_g + 1):
            acc = alg.zeros(len(rows))
            for i in range(c - d_g, min(c, d_f) + 1):
                acc = alg.plus(acc, alg.times(i, F[rows, i], G[:, c - i]))
            keep &= alg.is_zero(acc)
        return rows[keep], G[keep]

    def extend(rows, G, k):
        if k > d_g:
            r, g = finish(rows, G)
            if len(r):
                yield r, g
            return
        for s in range(0, len(rows), step):
            r = np.repeat(rows[s:s + step], N)
            prev = np.repeat(G[s:s + step], N, axis=0)
            b = np.tile(cand, min(step, len(rows) - s))
            counter[0] += len(r)
            acc = alg.times(0, F[r, 0], b)
            for i in range(1, min(k, d_f) + 1):
                acc = alg.plus(acc, alg.times(i, F[r, i], prev[:, k - i]))
            keep = alg.is_zero(acc)
            if keep.any():
                yield from extend(r[keep], np.column_stack([prev[keep], b[keep]]), k + 1)

    yield from extend(np.arange(len(F)), np.empty((len(F), 0), dtype=np.intp), 0)


def exhaustive_pairs(alg, F: np.ndarray, d_g: int, counter: list, G_all: np.ndarray) -> Iterator[tuple]:
    """Multiply each ``f`` against every nonzero ``g`` and keep zero products."""
    d_f = F.shape[1] - 1
    M = len(G_all)
    for row in range(len(F)):
        counter[0] += M
        keep = np.ones(M, dtype=bool)
        for c in range(d_f + d_g + 1):
            acc = alg.zeros(M)
            for i in range(max(0, c - d_g), min(c, d_f) + 1):
                a = np.full(M, F[row, i], dtype=np.intp)
                acc = alg.plus(acc, alg.times(i, a, G_all[:, c - i]))
            keep &= alg.is_zero(acc)
        if keep.any():
            yield np.full(int(keep.sum()), row, dtype=np.intp), G_all[keep]


# ---------------------------------------------------------------------------
# driver


@dataclass
class ChunkOutcome:
    lo: int
    hi: int
    visited: int
    zero_pairs: int
    F: np.ndarray | None = None
    G: np.ndarray | None = None
    violation: tuple | None = None  # (F_row, G_row, i, j, value)


@dataclass
class ScanResult:
    status: str = "exhausted"
    visited: int = 0
    zero_pairs: int = 0
    violation: tuple | None = None
    frontier: int | None = None
    chunks: list = field(default_factory=list)


Checker = Callable[[np.ndarray, np.ndarray], "tuple | None"]


class PairScan:
    """Deterministic chunked scan of ``(f, g)`` pairs with ``f g = 0``.

    The ``f`` space is cut into contiguous chunks; chunks may be evaluated
    concurrently (``jobs``) but are always consumed in order, so verdicts,
    witnesses and budget cut-offs do not depend on ``jobs``.
    """

    def __init__(self, alg, d_f: int, d_g: int, strategy: str = "dfs",
                 budget: int = DEFAULT_BUDGET, jobs: int = 1):
        if strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
        if d_f < 0 or d_g < 0:
            raise ValueError("degree bounds must be >= 0")
        if budget <= 0:
            raise ValueError("budget must be positive")
        self.alg = alg
        self.d_f = d_f
        self.d_g = d_g
        self.strategy = strategy
        self.budget = budget
        self.jobs = max(1, int(jobs))
        self.f_count = alg.size ** (d_f + 1)

    @cached_property
    def _G_all(self) -> np.ndarray:
        return _nonzero(self.alg, decode_rows(self.alg.size, self.d_g, 0, self.alg.size ** (self.d_g + 1)))

    def _chunk_bounds(self) -> list:
        if self.strategy == "dfs":
            size = _DFS_CHUNK
        else:
            size = max(1, _EXHAUSTIVE_CHUNK_WORK // max(1, len(self._G_all)))
        return [(lo, min(lo + size, self.f_count)) for lo in range(0, self.f_count, size)]

    def _run_chunk(self, lo: int, hi: int, check: Checker | None, collect: bool) -> ChunkOutcome:
        F = _nonzero(self.alg, decode_rows(self.alg.size, self.d_f, lo, hi))
        counter = [0]
        if self.strategy == "dfs":
            batches = dfs_pairs(self.alg, F, self.d_g, counter)
        else:
            batches = exhaustive_pairs(self.alg, F, self.d_g, counter, self._G_all)
        rows, gs = [], []
        for r, g in batches:
            rows.append(r)
            gs.append(g)
        if rows:
            r = np.concatenate(rows)
            G = np.concatenate(gs)
        else:
            r = np.empty(0, dtype=np.intp)
            G = np.empty((0, self.d_g + 1), dtype=np.intp)
        Fr = F[r]
        out = ChunkOutcome(lo, hi, counter[0], len(r))
        if check is not None and len(r):
            hit = check(Fr, G)
            if hit is not None:
                k, i, j, value = hit
                out.violation = (Fr[k], G[k], i, j, value)
                out.zero_pairs = k + 1
        if collect:
            out.F, out.G = Fr, G
        return out

    def chunks(self, check: Checker | None = None, collect: bool = False) -> Iterator[ChunkOutcome]:
        bounds = self._chunk_bounds()
        if self.jobs == 1:
            for lo, hi in bounds:
                yield self._run_chunk(lo, hi, check, collect)
            return
        with ThreadPoolExecutor(max_workers=self.jobs) as pool:
            for w in range(0, len(bounds), self.jobs):
                window = bounds[w:w + self.jobs]
                futures = [pool.submit(self._run_chunk, lo, hi, check, collect) for lo, hi in window]
                for fut in futures:
                    yield fut.result()

    def run(self, check: Checker | None = None, collect: bool = False) -> ScanResult:
        """Scan until the first violation, the budget, or exhaustion."""
        res = ScanResult()
        for ch in self.chunks(check, collect):
            res.visited += ch.visited
            res.zero_pairs += ch.zero_pairs
            if collect:
                res.chunks.append(ch)
            if ch.violation is not None:
                res.violation = ch.violation
                res.status = "violation"
                res.frontier = ch.hi
                break
            if res.visited > self.budget and ch.hi < self.f_count:
                res.status = "budget-hit"
                res.frontier = ch.hi
                break
        return res


def first_violation(alg, test: str) -> Checker:
    """Checker returning the first pair whose product ``a_i alpha^i(b_j)``
    fails ``test`` ("zero" or "central"), as ``(row, i, j, value)``."""
    predicate = alg.is_zero if test == "zero" else alg.is_central

    def check(F: np.ndarray, G: np.ndarray):
        d_f, d_g = F.shape[1] - 1, G.shape[1] - 1
        ok = np.ones((len(F), d_f + 1, d_g + 1), dtype=bool)
        values = {}
        for i in range(d_f + 1):
            for j in range(d_g + 1):
                v = alg.times(i, F[:, i], G[:, j])
                values[i, j] = v
                ok[:, i, j] = predicate(v)
        bad = ~ok.reshape(len(F), -1).all(axis=1)
        if not bad.any():
            return None
        k = int(np.flatnonzero(bad)[0])
        i, j = (int(t) for t in np.argwhere(~ok[k])[0])
        return k, i, j, values[i, j][k]

    return check
