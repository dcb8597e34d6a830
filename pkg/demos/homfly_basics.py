"""
HOMFLYPT polynomials from braids and PD codes
=============================================

"""

from periodic_homfly import braid_closure, homfly, homfly_coeffs, parse_braid, parse_pd
from periodic_homfly.diagram import smooth_crossing, switch_crossing

# A braid word "s: i j ..." closes up to a link; negative letters are inverse generators.
trefoil = braid_closure(parse_braid("2: 1 1 1"))
print("right trefoil:", homfly(trefoil))

# PD codes as printed by the usual knot tables work too.  This one is the left trefoil.
print("left trefoil: ", homfly(parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]")))

# The skein relation v^-1 P(L+) - v P(L-) = z P(L0), checked at the first crossing.
plus = trefoil
minus = switch_crossing(trefoil, 0)
zero = smooth_crossing(trefoil, 0)
lhs = homfly(plus).scale(1, -1) - homfly(minus).scale(1, 1)
print("skein holds:", lhs == homfly(zero).scale(1, 0, 1))

# Coefficients of each power of z.  For an n-component link the lowest power is z^(1-n).
hopf = braid_closure(parse_braid("2: 1 1"))
cs = homfly_coeffs(hopf)
for i in sorted(cs):
    print(f"P_{cs.exponent(i)} =", cs[i])
