"""Brute-force reference implementations used only by the tests.

Nothing here imports the package: these are the slow, obviously-correct
routes the library is checked against.
"""

import cmath
import math


def is_prime_trial(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def odd_primes(upto, start=3):
    return [p for p in range(start, upto + 1) if p % 2 and is_prime_trial(p)]


def squares_mod(p):
    return {x * x % p for x in range(p)}


def legendre_table(a, p):
    """(a/p) from the residue table: 0, +1 for a nonzero square, else -1."""
    a %= p
    if a == 0:
        return 0
    return 1 if a in squares_mod(p) else -1


def factor(n):
    """Prime factorization of n > 0 by trial division, as a list with repeats."""
    out = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def kronecker_factor(a, n):
    """Kronecker symbol through the factorization of n and residue tables."""
    if n == 0:
        return 1 if abs(a) == 1 else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    for q in factor(n):
        if q == 2:
            if a % 2 == 0:
                return 0
            result *= 1 if a % 8 in (1, 7) else -1
        else:
            result *= legendre_table(a, q)
    return result


def count_points(a, p):
    return sum(1 for x in range(p) for y in range(p) if (y * y - a * x * x - 1) % p == 0)


def count_general_brute(m1, m2, n, p):
    return sum(
        1 for x1 in range(p) for x2 in range(p) if (m1 * x1 * x1 + m2 * x2 * x2 - n) % p == 0
    )


def count_cubic(k2, k1, k0, p):
    return sum(
        1
        for x in range(p)
        for y in range(p)
        if (y * y - (x**3 + k2 * x * x + k1 * x + k0)) % p == 0
    )


def naive_sum(terms):
    """Plain left-to-right complex sum, no compensation."""
    total = 0j
    for t in terms:
        total += t
    return total


def e(x):
    return cmath.exp(2j * math.pi * x)
