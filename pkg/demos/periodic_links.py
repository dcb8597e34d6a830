"""
Periodic links and their mod-p congruences
==========================================

"""

import random

from periodic_homfly import (
    FactorPresentation,
    check_diagram,
    lowest_coefficient_formula,
    skein_residual,
    make_extended,
    make_torus_extended,
    parse_braid,
    skein_triple,
)
from periodic_homfly.periodic import random_factor

# T(3,3) plus its braid axis: the closure of (s1 s2)^3 is invariant under a 1/3 turn
# about the axis, and each component links the axis once.
d = make_torus_extended(3, 1, 1)
print(d.n_components, "components,", d.n_crossings, "crossings")
print(check_diagram(d, 3).summary())

# The lowest coefficient only depends on linking numbers and the components' own polynomials.
print("product formula:", lowest_coefficient_formula(d))

# Any factor braid whose permutation has cycle lengths divisible by p gives an example.
f = FactorPresentation(parse_braid("3: 1 -2 1 1"), 3, r=2)
print(f)
print(check_diagram(make_extended(f), 3, r=2).summary())

# Random factors, all of which must pass.
rng = random.Random(1)
for _ in range(5):
    f = random_factor(rng, 3)
    print(f, "->", check_diagram(make_extended(f), 3).verdict)

# Changing one crossing in every period at once: the three polynomials satisfy
# v^-p P(+) - v^p P(-) = z^p P(0) modulo p.
t = skein_triple(parse_braid("3: 1 2"), 1, 3)
print("residual:", skein_residual(t))

# A four-component link that fails: the Hopf link next to two split unknots.
from periodic_homfly import braid_closure
from periodic_homfly.diagram import disjoint_union, unlink

hopf_plus = disjoint_union(braid_closure(parse_braid("2: 1 1")), unlink(2))
print(check_diagram(hopf_plus, 3).summary())
