"""Solution counts for y^2 = a x^2 + 1 over F_p.

Three independent routes are provided (enumeration, the closed formula and a
character sum) so each can be used as an oracle for the others.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DegenerateCoefficient,
    DomainError,
    EvenModulus,
    OracleScaleExceeded,
    UnsupportedCongruenceClass,
)
from .modarith import check_prime
from .symbols import legendre

ORACLE_MAX_P = 10_000
ELLIPTIC_MAX_P = 1_000_000
MAX_ABS_A = 1 << 31

# Over F_2 the curve always has exactly two points, whatever a is.
P2_SOLUTION_COUNT = 2


@dataclass(frozen=True)
class Curve:
    a: int
    p: int

    def __post_init__(self):
        if self.a == 0:
            raise DomainError("a must be nonzero")
        if abs(self.a) > MAX_ABS_A:
            raise DomainError(f"|a| must not exceed 2**31, got {self.a}")
        check_prime(self.p)

    @property
    def degenerate(self) -> bool:
        return self.a % self.p == 0


@dataclass(frozen=True)
class GeneralConic:
    """m1 x1^2 + m2 x2^2 = n over F_p."""

    m1: int
    m2: int
    n: int
    p: int


@dataclass(frozen=True)
class CountResult:
    N: int
    b: int

    @classmethod
    def from_count(cls, p: int, n_solutions: int) -> CountResult:
        return cls(N=n_solutions, b=p - n_solutions)


def _odd(p: int) -> int:
    if p == 2:
        raise EvenModulus("p = 2 always has two solutions; use P2_SOLUTION_COUNT")
    return p


def enumerate_solutions(c: Curve) -> list[tuple[int, int]]:
    """All (x, y) in [0, p)^2 on the curve, in lexicographic order.

    Deliberately naive: a full y-scan for every x.
    """
    p = _odd(c.p)
    if p > ORACLE_MAX_P:
        raise OracleScaleExceeded(f"p = {p} is above the enumeration limit {ORACLE_MAX_P}")
    a = c.a % p
    squares: dict[int, list[int]] = {}
    for y in range(p):
        squares.setdefault(y * y % p, []).append(y)
    points = []
    for x in range(p):
        for y in squares.get((a * x * x + 1) % p, ()):
            points.append((x, y))
    return points


def count_bruteforce(c: Curve) -> CountResult:
    return CountResult.from_count(c.p, len(enumerate_solutions(c)))


def count_formula(c: Curve) -> CountResult:
    p = _odd(c.p)
    if c.degenerate:
        # y^2 = 1 with x free
        return CountResult.from_count(p, 2 * p)
    return CountResult.from_count(p, p - legendre(c.a, p))


def count_general(g: GeneralConic) -> CountResult:
    p = _odd(check_prime(g.p))
    if (g.m1 * g.m2 * g.n) % p == 0:
        raise DegenerateCoefficient(f"m1*m2*n = 0 mod {p}")
    return CountResult.from_count(p, p - legendre(-g.m1 * g.m2, p))


def char_sum_count(c: Curve) -> CountResult:
    p = _odd(c.p)
    a = c.a % p
    total = sum(legendre(a * x * x + 1, p) for x in range(p))
    return CountResult.from_count(p, p + total)


def s_sum(n: int, p: int) -> int:
    p = _odd(check_prime(p))
    if n % p == 0:
        raise DegenerateCoefficient(f"n = {n} is 0 mod {p}")
    return sum(legendre(b * (b - n), p) for b in range(p))


def elliptic_b(k2: int, k1: int, k0: int, p: int) -> int:
    """b(p) = p - N(p) for y^2 = x^3 + k2 x^2 + k1 x + k0, by character sum."""
    p = _odd(check_prime(p))
    if p > ELLIPTIC_MAX_P:
        raise OracleScaleExceeded(f"p = {p} is above {ELLIPTIC_MAX_P}")
    return -sum(legendre(((x + k2) * x + k1) * x + k0, p) for x in range(p))


def conductor(a: int) -> int:
    if a == 0 or a % 4 == 0:
        raise UnsupportedCongruenceClass(f"conductor undefined for a = {a}")
    return abs(a) if a % 4 == 1 else 4 * abs(a)


def level(a: int) -> int:
    # only the classes 1 and 3 mod 4 have a level; 2 mod 4 is left undefined
    if a == 0 or a % 4 in (0, 2):
        raise UnsupportedCongruenceClass(f"level undefined for a = {a}")
    return abs(a) if a % 4 == 1 else 4 * abs(a)
