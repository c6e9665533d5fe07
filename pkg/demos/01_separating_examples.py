"""
Skew Armendariz versus central skew Armendariz
===============================================

Z2 x Z2 with the coordinate swap. Some zero products in R[x; alpha]
have nonzero coefficient products, but every such product is central.
"""

from skewarm import SkewPoly, paper_fixture, skew_mul
from skewarm import is_central_skew_armendariz, is_skew_armendariz

fx = paper_fixture("EX1-swap")
R, alpha = fx.ring, fx.twist
print(R.name, "order", R.order, "| twist", alpha.name)

# f = (1,0) + (1,0)x, g = (0,1) + (1,0)x
f = SkewPoly(R, alpha, (R.element("(1,0)"), R.element("(1,0)")))
g = SkewPoly(R, alpha, (R.element("(0,1)"), R.element("(1,0)")))
print("f g =", skew_mul(f, g).to_str())

a1 = f.coeff(1)
b0 = g.coeff(0)
print("a_1 alpha(b_0) =", R.label(R.mul[a1, alpha(b0)]))

###############################################################################
# The checker finds its own witness (the first one in enumeration order).

rep = is_skew_armendariz(R, alpha, 1)
print(rep.summary())
print(is_central_skew_armendariz(R, alpha, 1).summary())

###############################################################################
# Upper triangular 2x2 over Z3 with an inner twist: here a coefficient
# product leaves the center, so even the central version fails.

fx = paper_fixture("EX5-T2F3")
rep = is_central_skew_armendariz(fx.ring, fx.twist, 1)
print(rep.summary())
