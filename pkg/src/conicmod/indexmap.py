"""Bijection between odd n in {1, 3, ..., 2a-1} \\ {a} and m in {1, ..., a-1}.

For odd a >= 3 the two sets are matched by n = 4m - a(2l - 1). Going from n
to m uses a solution of 1 = 4X + aY: m = nX is a solution, and shifting m by
multiples of a (l by twice as many) normalizes it into range.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, ExcludedValue, OutOfRange


@dataclass(frozen=True)
class IndexTriple:
    n: int
    m: int
    ell: int
    a: int

    def __post_init__(self):
        if self.n != 4 * self.m - self.a * (2 * self.ell - 1):
            raise DomainError(f"{self} violates n = 4m - a(2l - 1)")


def _check_a(a: int) -> None:
    if a < 3 or a % 2 == 0:
        raise DomainError(f"a must be odd and >= 3, got {a}")


def _ext_gcd(x: int, y: int) -> tuple[int, int, int]:
    """(g, s, t) with s*x + t*y = g = gcd(x, y)."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while y:
        q, r = divmod(x, y)
        x, y = y, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return x, s0, t0


def solve_unit(a: int) -> tuple[int, int]:
    """(X0, Y0) with 4*X0 + a*Y0 = 1; Y0 is necessarily odd."""
    _check_a(a)
    g, x0, y0 = _ext_gcd(4, a)
    assert g == 1 and y0 % 2 == 1
    return x0, y0


def n_to_m(n: int, a: int) -> IndexTriple:
    _check_a(a)
    if n == a:
        raise ExcludedValue(f"n = a = {a} has no partner")
    if not (1 <= n <= 2 * a - 1) or n % 2 == 0:
        raise OutOfRange(f"n = {n} is not an odd integer in [1, {2 * a - 1}]")
    x0, y0 = solve_unit(a)
    m0 = n * x0
    ell0 = (1 - n * y0) // 2  # from -(2 l0 - 1) = n Y0
    k = -(m0 // a)  # integer shift putting m into [0, a)
    m, ell = m0 + k * a, ell0 + 2 * k
    return IndexTriple(n, m, ell, a)


def m_to_n(m: int, a: int) -> IndexTriple:
    _check_a(a)
    if not 1 <= m <= a - 1:
        raise OutOfRange(f"m = {m} is not in [1, {a - 1}]")
    # n = 4m + a - 2a*l must land in [1, 2a - 1]
    ell = (4 * m + a - 1) // (2 * a)
    return IndexTriple(4 * m - a * (2 * ell - 1), m, ell, a)


def index_table(a: int) -> list[IndexTriple]:
    return [m_to_n(m, a) for m in range(1, a)]


def verify_bijection(a: int) -> bool:
    _check_a(a)
    table = index_table(a)
    admissible = {n for n in range(1, 2 * a, 2) if n != a}
    hit = [t.n for t in table]
    if len(set(hit)) != len(hit) or set(hit) != admissible:
        return False
    return all(n_to_m(t.n, a) == t for t in table)
