"""
Electron from a Hertz potential
===============================

A 2-form Hertz potential plus two scalars determine an electromagnetic
potential and a Stratton 3-form. When the Hertz constraint holds, the
assembled even field solves the Dirac-Hestenes equation.
"""

import random
from fractions import Fraction

from stafield import algebra as ga
from stafield import generators as gen
from stafield.hertz import (G5_LOWER, assemble_psi, electron_theorem_check, em_potential,
                            hertz_residual, stratton_potential, subsidiary_residuals)
from stafield.spinor import dh_residual

m = Fraction(3)
h = gen.hertz_rest(m)
print("Pi =", h.Pi)
print("G  =", h.G)
print("A  =", em_potential(h))
print("g_5 S =", stratton_potential(h))
print("Hertz residual:", hertz_residual(h))

psi = assemble_psi(h)
print("assembled psi =", psi.psi)
print("DH residual:", dh_residual(psi, m))

# the wave conditions: three hold, the Stratton one does not
for name, r in zip(("A", "g_5 S", "G", "P"), subsidiary_residuals(h)):
    print(f"wave condition on {name}:", r)

# g_5 is the lowered volume element
print("g_5 == -g5:", G5_LOWER == -ga.gamma5())

# the implication on a boosted, superposed family
for hd in gen.hertz_family(random.Random(1), 5):
    out = electron_theorem_check(hd)
    print("premise", out.premise_holds, "conclusion", out.conclusion_holds)
