"""
Massless spinors as Maxwell fields
==================================

An even field with dirac(psi) = 0 splits into a 2-form and two currents that
solve the Maxwell equations with magnetic monopole current, and going back
through the ideal recovers the spinor picture.
"""

import random

from stafield import generators as gen
from stafield.fields import dirac
from stafield.maxwell import GMESystem, gme_residual, gme_split_residuals
from stafield.spinor import bosonize, decompose_even, weyl_project

psi = gen.null_plane_wave((1, 0, 0, 1))
print("psi =", psi)
print("dirac(psi) =", dirac(psi))

s, F, p = decompose_even(psi)
print("S =", s, " F =", F, " P =", p)

F, Je, Jm = bosonize(psi)
sys_ = GMESystem(F, Je, Jm)
print("Maxwell residual:", gme_residual(sys_))
print("split residuals:", gme_split_residuals(sys_))

# a richer massless field: superposed waves plus a constant
rng = random.Random(3)
wave = gen.massless_family(rng, 4)[3]
F, Je, Jm = bosonize(wave)
print("currents present:", not Je.is_zero(), not Jm.is_zero())
print("Maxwell residual is zero:", gme_residual(GMESystem(F, Je, Jm)).is_zero())

# the Weyl half is still massless
print("dirac(weyl) is zero:", dirac(weyl_project(wave)).is_zero())

# off shell, the Maxwell residual is exactly dirac(psi)
junk = gen.random_even_field(rng)
print("off-shell residual == dirac(psi):", gme_residual(GMESystem(*bosonize(junk))) == dirac(junk))
