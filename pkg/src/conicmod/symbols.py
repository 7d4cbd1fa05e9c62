"""Legendre, Jacobi and Kronecker symbols as exact integers."""

from __future__ import annotations

from .errors import EvenArgument, EvenModulus, OutOfRange, UnsupportedCongruenceClass
from .modarith import check_prime

# (a/2) indexed by a mod 8
_TAB2 = (0, 1, 0, -1, 0, -1, 0, 1)


def legendre(a: int, p: int) -> int:
    """Euler's criterion: a^((p-1)/2) mod p, mapped into {-1, 0, 1}."""
    if p == 2:
        raise EvenModulus("Legendre symbol needs an odd prime")
    check_prime(p)
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def _jacobi_odd(a: int, n: int) -> int:
    # n odd and positive
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def jacobi(a: int, n: int) -> int:
    if n < 1:
        raise OutOfRange(f"Jacobi symbol needs n >= 1, got {n}")
    if n % 2 == 0:
        raise EvenArgument(f"Jacobi symbol needs odd n, got {n}")
    return _jacobi_odd(a, n)


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n), defined for every pair of integers.

    Conventions: (a/0) = 1 iff a = +-1, (a/-1) = -1 iff a < 0.
    """
    if n == 0:
        return 1 if abs(a) == 1 else 0
    if a % 2 == 0 and n % 2 == 0:
        return 0
    k = 1
    while n % 2 == 0:
        n //= 2
        k *= _TAB2[a & 7]
    if n < 0:
        n = -n
        if a < 0:
            k = -k
    return k * _jacobi_odd(a, n)


def kronecker_period(a: int) -> int:
    """Period in p of p -> (a/p): |a| for a = 1 (mod 4), 4|a| for a = 2, 3 (mod 4)."""
    if a == 0 or a % 4 == 0:
        raise UnsupportedCongruenceClass(f"a = {a} is 0 mod 4")
    return abs(a) if a % 4 == 1 else 4 * abs(a)
