"""Builders for the rings and endomorphisms used throughout the package.

Every builder returns a validated :class:`FiniteRing` (full axiom scan) and
materializes complete tables.  Elements of a construction are numbered by
little-endian mixed radix over their coordinates, so e.g. in a matrix ring
over ``Z2`` the matrix unit ``e11`` is element 1.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

import numpy as np

from .endo import RingMap, identity_map, verify_map
from .ring import MAX_ORDER, Coordinates, FiniteRing, same_tables, validate_ring


def _radix_rows(base: int, width: int) -> np.ndarray:
    """All coordinate tuples in index order (coordinate 0 least significant)."""
    idx = np.arange(base**width)
    return np.stack([(idx // base**k) % base for k in range(width)], axis=1) if width else np.zeros((1, 0), int)


def _encode(rows: np.ndarray, base: int) -> np.ndarray:
    weights = base ** np.arange(rows.shape[-1])
    return (rows * weights).sum(axis=-1)


def _check_cap(order: int, what: str) -> None:
    if order > MAX_ORDER:
        raise ValueError(f"{what} would have order {order}, above the cap {MAX_ORDER}")


def zmod(n: int) -> FiniteRing:
    """Integers modulo ``n``."""
    if n < 2:
        raise ValueError("need n >= 2")
    a = np.arange(n)
    return validate_ring((a[:, None] + a[None, :]) % n, (a[:, None] * a[None, :]) % n, 0, 1,
                         f"Z{n}", [str(i) for i in range(n)])


def gf4() -> FiniteRing:
    """The field with four elements, ``c0 + c1 w`` with ``w^2 = w + 1``."""
    rows = _radix_rows(2, 2)
    add = _encode((rows[:, None, :] + rows[None, :, :]) % 2, 2)
    mul = np.zeros((4, 4), dtype=int)
    for u, (a0, a1) in enumerate(rows):
        for v, (b0, b1) in enumerate(rows):
            c0 = a0 * b0 + a1 * b1
            c1 = a0 * b1 + a1 * b0 + a1 * b1
            mul[u, v] = (c0 % 2) + 2 * (c1 % 2)
    return validate_ring(add, mul, 0, 1, "GF4", ["0", "1", "w", "w+1"])


def frobenius(F: FiniteRing, p: int = 2) -> RingMap:
    images = [F.power(a, p) for a in range(F.order)]
    return verify_map(F, F, images, "frob")


# ---------------------------------------------------------------------------
# direct products


class Product(NamedTuple):
    ring: FiniteRing
    injections: tuple[RingMap, RingMap]
    projections: tuple[RingMap, RingMap]


def direct_product(R1: FiniteRing, R2: FiniteRing, name: str | None = None) -> Product:
    """``R1 x R2`` with element ``(a, b)`` numbered ``a + |R1| b``."""
    n1, n2 = R1.order, R2.order
    _check_cap(n1 * n2, "direct product")
    u = np.arange(n1 * n2)
    A, B = u % n1, u // n1
    add = R1.add[A[:, None], A[None, :]] + n1 * R2.add[B[:, None], B[None, :]]
    mul = R1.mul[A[:, None], A[None, :]] + n1 * R2.mul[B[:, None], B[None, :]]
    labels = [f"({R1.label(a)},{R2.label(b)})" for a, b in zip(A, B)]
    P = validate_ring(add, mul, R1.zero + n1 * R2.zero, R1.one + n1 * R2.one,
                      name or f"{R1.name}x{R2.name}", labels,
                      coords=Coordinates((R1, R2), np.stack([A, B], axis=1)))
    inj = (
        verify_map(R1, P, np.arange(n1) + n1 * R2.zero, "inj1", unital=False),
        verify_map(R2, P, R1.zero + n1 * np.arange(n2), "inj2", unital=False),
    )
    proj = (verify_map(P, R1, A, "proj1"), verify_map(P, R2, B, "proj2"))
    return Product(P, inj, proj)


def product_map(P: FiniteRing, alpha1: RingMap, alpha2: RingMap, name: str | None = None) -> RingMap:
    """Componentwise endomorphism ``(a, b) -> (alpha1 a, alpha2 b)``."""
    R1, _ = P.coords.base
    A, B = P.coords.table[:, 0], P.coords.table[:, 1]
    images = alpha1.images[A] + R1.order * alpha2.images[B]
    return verify_map(P, P, images, name or f"({alpha1.name},{alpha2.name})")


def swap_automorphism(P: FiniteRing) -> RingMap:
    """``(a, b) -> (b, a)`` on ``R x R``."""
    R1, R2 = P.coords.base
    if not same_tables(R1, R2):
        raise ValueError("swap needs two copies of the same ring")
    A, B = P.coords.table[:, 0], P.coords.table[:, 1]
    return verify_map(P, P, B + R1.order * A, "swap")


# ---------------------------------------------------------------------------
# matrix subrings


def pattern_ring(R: FiniteRing, pattern: Sequence[Sequence[int]], name: str) -> FiniteRing:
    """Subring of ``M_n(R)`` of matrices following ``pattern``.

    ``pattern[i][j]`` is a parameter number (positions sharing a number hold
    equal entries) or ``-1`` for an entry fixed at zero.  Raises ValueError
    if the pattern is not closed under multiplication or lacks the identity.
    """
    pat = np.array(pattern, dtype=int)
    n = pat.shape[0]
    p = int(pat.max()) + 1
    N = R.order**p
    _check_cap(N, f"pattern ring {name}")
    params = _radix_rows(R.order, p)
    first = [tuple(np.argwhere(pat == k)[0]) for k in range(p)]

    def to_matrix(rows):
        mats = np.full(rows.shape[:-1] + (n, n), R.zero, dtype=np.intp)
        for i in range(n):
            for j in range(n):
                if pat[i, j] >= 0:
                    mats[..., i, j] = rows[..., pat[i, j]]
        return mats

    def to_index(mats):
        rows = np.stack([mats[..., i, j] for i, j in first], axis=-1)
        if not (to_matrix(rows) == mats).all():
            raise ValueError(f"pattern for {name} is not closed under the ring operations")
        return _encode(rows, R.order)

    mats = to_matrix(params)
    add = _encode(R.add[params[:, None, :], params[None, :, :]], R.order)
    X, Y = mats[:, None], mats[None, :]
    prod = np.full((N, N, n, n), R.zero, dtype=np.intp)
    for i in range(n):
        for k in range(n):
            acc = np.full((N, N), R.zero, dtype=np.intp)
            for j in range(n):
                acc = R.add[acc, R.mul[X[..., i, j], Y[..., j, k]]]
            prod[..., i, k] = acc
    mul = to_index(prod)
    ident = np.full((n, n), R.zero, dtype=np.intp)
    np.fill_diagonal(ident, R.one)
    one = int(to_index(ident[None])[0])
    zero = int(_encode(np.full((1, p), R.zero), R.order)[0])
    labels = ["[" + ",".join("[" + ",".join(R.label(v) for v in row) + "]" for row in m) + "]" for m in mats]
    return validate_ring(add, mul, zero, one, name, labels,
                         coords=Coordinates(R, params, tuple(map(tuple, pat.tolist()))))


def matrix_ring(R: FiniteRing, n: int = 2) -> FiniteRing:
    """``M_n(R)``; coordinates are the entries in row-major order."""
    return pattern_ring(R, np.arange(n * n).reshape(n, n), f"M{n}({R.name})")


def upper_triangular(R: FiniteRing, n: int = 2) -> FiniteRing:
    """``T_n(R)``; coordinates are the upper entries in row-major order."""
    pat = -np.ones((n, n), dtype=int)
    pat[np.triu_indices(n)] = np.arange(n * (n + 1) // 2)
    return pattern_ring(R, pat, f"T{n}({R.name})")


def constant_diagonal_subring(R: FiniteRing, n: int = 3) -> FiniteRing:
    """Upper triangular matrices with one repeated diagonal entry.

    ``n = 3`` gives ``(a b c; 0 a d; 0 0 a)``, ``n = 2`` gives ``(a b; 0 a)``.
    """
    pat = -np.ones((n, n), dtype=int)
    np.fill_diagonal(pat, 0)
    iu = np.triu_indices(n, 1)
    pat[iu] = np.arange(1, len(iu[0]) + 1)
    return pattern_ring(R, pat, f"U{n}({R.name})")


def diagonal_ring(R: FiniteRing, n: int = 2) -> FiniteRing:
    pat = -np.ones((n, n), dtype=int)
    np.fill_diagonal(pat, np.arange(n))
    return pattern_ring(R, pat, f"D{n}({R.name})")


def entrywise_map(M: FiniteRing, alpha: RingMap, name: str | None = None) -> RingMap:
    """``(a_ij) -> (alpha(a_ij))`` on a matrix subring built over ``alpha.source``."""
    base = M.coords.base
    if not same_tables(base, alpha.source):
        raise ValueError("alpha must be an endomorphism of the coefficient ring")
    images = _encode(alpha.images[M.coords.table], base.order)
    return verify_map(M, M, images, name or f"{alpha.name}-bar")


def coordinate_map(M: FiniteRing, fn, name: str) -> RingMap:
    """Map given on coordinate tuples, e.g. ``(a, b, c) -> (a, -b, c)``."""
    images = [M.coords.index(fn(tuple(int(v) for v in row))) for row in M.coords.table]
    return verify_map(M, M, images, name)


def negate_coordinates(M: FiniteRing, positions: Sequence[int], name: str) -> RingMap:
    neg = M.coords.base.neg

    def fn(row):
        return tuple(neg[v] if k in positions else v for k, v in enumerate(row))

    return coordinate_map(M, fn, name)


# ---------------------------------------------------------------------------
# trivial extension and truncated polynomials


def trivial_extension(R: FiniteRing, alpha: RingMap | None = None) -> tuple[FiniteRing, RingMap]:
    """``T(R, R) = R + R`` with ``(r1, m1)(r2, m2) = (r1 r2, r1 m2 + m1 r2)``
    and the induced map ``(a, b) -> (alpha a, alpha b)``."""
    n = R.order
    _check_cap(n * n, "trivial extension")
    alpha = alpha if alpha is not None else identity_map(R)
    u = np.arange(n * n)
    r, m = u % n, u // n
    r1, r2, m1, m2 = r[:, None], r[None, :], m[:, None], m[None, :]
    add = R.add[r1, r2] + n * R.add[m1, m2]
    mul = R.mul[r1, r2] + n * R.add[R.mul[r1, m2], R.mul[m1, r2]]
    labels = [f"({R.label(a)},{R.label(b)})" for a, b in zip(r, m)]
    T = validate_ring(add, mul, R.zero + n * R.zero, R.one + n * R.zero, f"T({R.name},{R.name})",
                      labels, coords=Coordinates(R, np.stack([r, m], axis=1)))
    abar = verify_map(T, T, alpha.images[r] + n * alpha.images[m], f"{alpha.name}-bar")
    return T, abar


def truncated_polynomial_ring(R: FiniteRing, k: int = 2) -> FiniteRing:
    """``R[x]/<x^k>`` with ``c_0 + c_1 x + ...`` numbered ``sum c_i |R|^i``."""
    n = R.order
    _check_cap(n**k, "truncated polynomial ring")
    rows = _radix_rows(n, k)
    add = _encode(R.add[rows[:, None, :], rows[None, :, :]], n)
    N = len(rows)
    prod = np.full((N, N, k), R.zero, dtype=np.intp)
    for s in range(k):
        for i in range(s + 1):
            prod[..., s] = R.add[prod[..., s], R.mul[rows[:, None, i], rows[None, :, s - i]]]
    mul = _encode(prod, n)
    zero = int(_encode(np.full((1, k), R.zero), n)[0])
    one_row = np.full((1, k), R.zero)
    one_row[0, 0] = R.one
    labels = [" + ".join(f"{R.label(c)}x^{i}" if i else R.label(c) for i, c in enumerate(row)) for row in rows]
    return validate_ring(add, mul, zero, int(_encode(one_row, n)[0]), f"{R.name}[x]/<x^{k}>", labels,
                         coords=Coordinates(R, rows))


# ---------------------------------------------------------------------------
# corners and relabeling


def corner_ring(R: FiniteRing, e: int, alpha: RingMap | None = None, name: str | None = None):
    """``eR`` as a ring with identity ``e`` (``e`` a central idempotent).

    Returns ``(ring, restricted_twist_or_None, embedding)``; the twist is
    restricted only when ``alpha(eR)`` lies in ``eR``.
    """
    if R.mul[e, e] != e or not R.center_mask[e]:
        raise ValueError(f"{R.label(e)} is not a central idempotent")
    members = np.unique(R.mul[e, :])
    if len(members) < 2:
        raise ValueError("eR must have at least two elements")
    pos = np.full(R.order, -1, dtype=np.intp)
    pos[members] = np.arange(len(members))
    sub = np.ix_(members, members)
    add, mul = pos[R.add[sub]], pos[R.mul[sub]]
    if (add < 0).any() or (mul < 0).any():
        raise ValueError("eR is not closed")
    labels = [R.label(a) for a in members]
    C = validate_ring(add, mul, int(pos[R.zero]), int(pos[e]), name or f"{R.label(e)}{R.name}", labels)
    emb = verify_map(C, R, members, "embed", unital=False)
    twist = None
    if alpha is not None and (pos[alpha.images[members]] >= 0).all():
        twist = verify_map(C, C, pos[alpha.images[members]], f"{alpha.name}|")
    return C, twist, emb


def relabel(R: FiniteRing, perm: Sequence[int], name: str | None = None) -> tuple[FiniteRing, RingMap]:
    """Isomorphic copy in which element ``a`` of ``R`` becomes ``perm[a]``."""
    perm = np.asarray(perm, dtype=np.intp)
    if sorted(perm.tolist()) != list(range(R.order)):
        raise ValueError("perm must be a permutation of the elements")
    add = np.empty_like(R.add)
    mul = np.empty_like(R.mul)
    add[np.ix_(perm, perm)] = perm[R.add]
    mul[np.ix_(perm, perm)] = perm[R.mul]
    labels = None
    if R.labels is not None:
        labels = [None] * R.order
        for a, p in enumerate(perm):
            labels[p] = R.labels[a]
    S = validate_ring(add, mul, int(perm[R.zero]), int(perm[R.one]), name or f"{R.name}'", labels)
    return S, verify_map(R, S, perm, "phi")
