"""
A free electron at rest, three ways
===================================

The rest-frame solution of the Dirac-Hestenes equation, a boosted copy of it,
and its images in the minimal left ideal and as a column spinor.
"""

from fractions import Fraction

from stafield import generators as gen
from stafield.matrix import adapted_rep, column_extract, column_unit, matrix_dirac_residual
from stafield.spinor import (dh_residual, ideal_dirac_residual, project_ideal,
                             standard_idempotent)

m = Fraction(2)
psi = gen.rest_solution(m)
print("psi =", psi)
print("dirac(psi) g21 - m psi g0 =", dh_residual(psi, m))

# a boost along x^1 by the rotor 5/4 + 3/4 g0 g1
u = gen.boost_rotor(1, Fraction(5, 4), Fraction(3, 4))
moving = gen.lorentz_transform(psi, u)
print("boosted terms:", sum(len(p.terms()) for _, p in moving.items()))
print("boosted residual is zero:", dh_residual(moving, m).is_zero())

# into the ideal: Psi = psi f, with the ideal's i acting as right g21
f = standard_idempotent().f
print("f =", f)
Psi = project_ideal(psi)
print("ideal residual is zero:", ideal_dirac_residual(Psi, m).is_zero())

# and into columns, in a basis where rep(f) is E11
print("rep(f) in the adapted basis:", adapted_rep(f))
print("unit on columns:", column_unit())
col = column_extract(Psi)
for i, c in enumerate(col):
    print(f"  column[{i}] =", c)
print("matrix residual:", matrix_dirac_residual(Psi, m))

# a non-solution keeps all three residuals in lockstep
junk = gen.rest_solution(m) + gen.rest_solution(m + 1)
print("off-shell, columns of ideal residual == matrix residual:",
      column_extract(ideal_dirac_residual(project_ideal(junk), m)) == matrix_dirac_residual(project_ideal(junk), m))
