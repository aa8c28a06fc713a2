"""
The spacetime algebra by hand
=============================

Blades, products, grades and the Hodge star, all with exact rationals.
"""

from fractions import Fraction

from stafield import algebra as ga
from stafield.algebra import Multivector

# generators square to the metric diag(+1, -1, -1, -1)
g0, g1, g2, g3 = (ga.gamma(mu) for mu in range(4))
print("g0 g0 =", g0 * g0)
print("g1 g1 =", g1 * g1)
print("g1 g2 + g2 g1 =", g1 * g2 + g2 * g1)

# blades are 4-bit masks; b0011 is g0 g1
e01 = g0 * g1
print(ga.blade_name(0b0011), "squared =", e01 * e01)

# wedge and left contraction split the product of a vector with anything
a = g1.scale(2) + e01 - ga.gamma5().scale(Fraction(1, 3))
print("g0 a          =", g0 * a)
print("g0 _| a + g0^a =", (g0 << a) + (g0 ^ a))

# the pseudoscalar
g5 = ga.gamma5()
print("g5 g5 =", g5 * g5, "   g5 g0 + g0 g5 =", g5 * g0 + g0 * g5)

# Hodge star as reverse(C) g5, checked against an index-permutation oracle
for mask in (0b0000, 0b0001, 0b0011, 0b1111):
    e = Multivector.blade(mask)
    print(f"*{ga.blade_name(mask)} = {ga.hodge(e)}   oracle {ga.hodge_combinatorial(e)}")

# applying the star twice gives a grade-dependent sign
print("** signs by grade:", [ga.double_hodge_sign(r) for r in range(5)])

# raising an index costs a metric sign: g_5 = g_0 g_1 g_2 g_3 = -g5
print("g_5 =", ga.lower_blade((0, 1, 2, 3)))
