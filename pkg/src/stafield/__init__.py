"""Exact spacetime-algebra field verification.

Multivectors and multivector fields over Cl(1,3) with rational (or Gaussian
rational) coefficients, the Dirac operator and exterior calculus, spinor and
Maxwell transcriptions, the Hertz-potential construction, and the matrix
representation. Every identity is checked by exact equality.
"""

__version__ = "0.1.0"

from .algebra import Multivector, gamma, gamma5, hodge
from .fields import MultivectorField, codiff, d, diamond, dirac
from .fourier import ExactnessError, FourierPoly
from .maxwell import GMESystem, SuperPotential, gme_residual
from .scalars import ComplexQ, RingMismatchError
from .spinor import bosonize, dh_residual, project_ideal, standard_idempotent

__all__ = [
    "__version__",
    "Multivector", "gamma", "gamma5", "hodge",
    "MultivectorField", "FourierPoly", "ExactnessError", "dirac", "d", "codiff", "diamond",
    "GMESystem", "SuperPotential", "gme_residual",
    "ComplexQ", "RingMismatchError",
    "bosonize", "dh_residual", "project_ideal", "standard_idempotent",
]
