"""Modular arithmetic over F_p and the quadratic ring F_p[t]/(t^2 - d).

Python integers never overflow, so the 2**61 modulus cap is a validation
rule rather than an arithmetic necessity; it keeps every modulus inside the
range where the Miller-Rabin base set below is proven deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import BasisMismatch, EvenModulus, ModulusError, NotInvertible

MAX_MODULUS = 1 << 61

# Deterministic for every n < 3.3e24 (Sorenson & Webster), which covers 64 bits.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for base in _MR_BASES:
        x = pow(base, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=8192)
def _is_supported_prime(p: int) -> bool:
    return p <= MAX_MODULUS and is_prime(p)


def check_prime(p: int, *, allow_two: bool = True) -> int:
    """Validate ``p`` as a supported prime modulus and return it."""
    if not isinstance(p, int) or isinstance(p, bool):
        raise ModulusError(f"modulus must be an integer, got {p!r}")
    if p > MAX_MODULUS:
        raise ModulusError(f"modulus {p} exceeds 2**61")
    if not _is_supported_prime(p):
        raise ModulusError(f"{p} is not prime")
    if p == 2 and not allow_two:
        raise EvenModulus("p = 2 is not supported here")
    return p


def mod_pow(base: int, exp: int, p: int) -> int:
    if exp < 0:
        raise ValueError("exponent must be non-negative")
    return pow(base % p, exp, p)


def mod_inv(x: int, p: int) -> int:
    x %= p
    if x == 0:
        raise NotInvertible(f"0 has no inverse mod {p}")
    try:
        return pow(x, -1, p)
    except ValueError as exc:
        raise NotInvertible(f"{x} is not invertible mod {p}") from exc


def sqrt_mod_scan(a: int, p: int) -> int | None:
    """Smallest y in [0, p) with y*y = a (mod p), or None.

    Exhaustive scan; meant for the small moduli used by the group module.
    """
    a %= p
    for y in range(p):
        if y * y % p == a:
            return y
    return None


@dataclass(frozen=True)
class Fp2Elem:
    """``u + v*sqrt(d)`` in F_p[t]/(t^2 - d).

    ``d`` may be a residue (or zero); the ring is then not a field but
    multiplication is still well defined.
    """

    u: int
    v: int
    d: int
    p: int

    def __post_init__(self):
        object.__setattr__(self, "u", self.u % self.p)
        object.__setattr__(self, "v", self.v % self.p)
        object.__setattr__(self, "d", self.d % self.p)

    @classmethod
    def one(cls, d: int, p: int) -> Fp2Elem:
        return cls(1, 0, d, p)

    def _check(self, other: Fp2Elem) -> None:
        if self.p != other.p or self.d != other.d:
            raise BasisMismatch(
                f"basis (p={self.p}, d={self.d}) vs (p={other.p}, d={other.d})"
            )

    def __mul__(self, other: Fp2Elem) -> Fp2Elem:
        if not isinstance(other, Fp2Elem):
            return NotImplemented
        self._check(other)
        p = self.p
        return Fp2Elem(
            (self.u * other.u + self.v * other.v * self.d) % p,
            (self.u * other.v + self.v * other.u) % p,
            self.d,
            p,
        )

    def __pow__(self, exp: int) -> Fp2Elem:
        if exp < 0:
            raise ValueError("exponent must be non-negative")
        result = Fp2Elem.one(self.d, self.p)
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base = base * base
            exp >>= 1
        return result

    def conj(self) -> Fp2Elem:
        return Fp2Elem(self.u, -self.v, self.d, self.p)

    def norm(self) -> int:
        return (self.u * self.u - self.d * self.v * self.v) % self.p

    def is_one(self) -> bool:
        return self.u == 1 % self.p and self.v == 0

    def __str__(self) -> str:
        return f"{self.u}+{self.v}*sqrt({self.d}) mod {self.p}"


def fp2_mul(x: Fp2Elem, y: Fp2Elem) -> Fp2Elem:
    return x * y


def fp2_pow(x: Fp2Elem, exp: int) -> Fp2Elem:
    return x**exp
