"""
Enumerating zero pairs
======================

Polynomials are coefficient rows; the scan yields numpy arrays F, G with
f g = 0 row by row.
"""

import numpy as np

from skewarm import paper_fixture
from skewarm.skewpoly import enumerate_zero_pairs

fx = paper_fixture("EX2-z4mat")
R, alpha = fx.ring, fx.twist

scan = enumerate_zero_pairs(R, alpha, 1, strategy="dfs")
F = np.concatenate([f for f, _ in scan.arrays()])
print("zero pairs with deg <= 1:", len(F), "| nodes visited:", scan.visited, "|", scan.status)

# exhaustive visits every ordered pair of nonzero polynomials
full = enumerate_zero_pairs(R, alpha, 1, strategy="exhaustive")
G = np.concatenate([g for _, g in full.arrays()])
print("exhaustive:", len(G), "pairs,", full.visited, "visits =", (R.order ** 2 - 1) ** 2)

###############################################################################
# A small budget stops early and says so.

tiny = enumerate_zero_pairs(R, alpha, 2, budget=10_000)
found = sum(len(f) for f, _ in tiny.arrays())
print("budget 10^4:", found, "pairs before", tiny.status)
