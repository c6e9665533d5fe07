"""Brute-force oracles used across the tests.

The oracles below deliberately avoid numpy vectorisation and the library's
search code: plain loops over the tables, so a bug in the fast paths cannot
hide behind the same bug in the check.
"""

import itertools


def naive_apply(alpha, b, times):
    for _ in range(times):
        b = int(alpha.images[b])
    return b


def naive_skew_mul(R, alpha, f, g):
    """(fg)_k = sum over i+j=k of a_i alpha^i(b_j), as a padded list."""
    out = [R.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = int(R.add[out[i + j], R.mul[a, naive_apply(alpha, b, i)]])
    return out


def all_polys(R, d):
    """Every coefficient tuple of length d+1 in lexicographic order (a_0 most significant)."""
    return list(itertools.product(range(R.order), repeat=d + 1))


def naive_zero_pairs(R, alpha, d_f, d_g):
    """Ordered list of (f, g) padded tuples, both nonzero, with fg = 0."""
    zero_f = (R.zero,) * (d_f + 1)
    zero_g = (R.zero,) * (d_g + 1)
    gs = [g for g in all_polys(R, d_g) if g != zero_g]
    out = []
    for f in all_polys(R, d_f):
        if f == zero_f:
            continue
        for g in gs:
            if all(c == R.zero for c in naive_skew_mul(R, alpha, f, g)):
                out.append((f, g))
    return out


def naive_center(R):
    return {a for a in range(R.order) if all(R.mul[a, r] == R.mul[r, a] for r in range(R.order))}


def naive_verdict(R, alpha, d, central):
    """'fails' or 'holds' for (central) skew Armendariz at bound d, from the naive pair list."""
    C = naive_center(R)
    for f, g in naive_zero_pairs(R, alpha, d, d):
        for i, a in enumerate(f):
            for b in g:
                v = int(R.mul[a, naive_apply(alpha, b, i)])
                if (v not in C) if central else (v != R.zero):
                    return "fails"
    return "holds"
