"""Quadratic curves y^2 = a x^2 + 1 over F_p.

Submodules:

- ``modarith``  modular arithmetic, primality, the ring F_p(sqrt d)
- ``symbols``   Legendre / Jacobi / Kronecker symbols
- ``conic``     solution counts, the S-sum, cubic character sums, conductor
- ``group``     the group law on the conic and its embedding into F_p(sqrt a)
- ``gausssum``  Gaussian sums, one-period sums of the symbol series, theta series
- ``indexmap``  the n = 4m - a(2l - 1) correspondence for odd a
- ``cli``       the ``conicmod`` command
"""

from .conic import Curve, CountResult, GeneralConic, char_sum_count, count_formula, enumerate_solutions
from .errors import DomainError
from .gausssum import PeriodSumResult, fbar
from .group import Point, add, find_generator, scalar_mul, verify_cyclic
from .symbols import jacobi, kronecker, legendre

__version__ = "0.1.0"

__all__ = [
    "CountResult",
    "Curve",
    "DomainError",
    "GeneralConic",
    "PeriodSumResult",
    "Point",
    "add",
    "char_sum_count",
    "count_formula",
    "enumerate_solutions",
    "fbar",
    "find_generator",
    "jacobi",
    "kronecker",
    "legendre",
    "scalar_mul",
    "verify_cyclic",
]
