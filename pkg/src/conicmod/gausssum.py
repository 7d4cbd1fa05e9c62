"""Gaussian sums and one-period extracts of the series sum (a/n) q^n.

For a = 1 (mod 4) the series uses the nome q = exp(2 pi i tau); for
a = 2, 3 (mod 4) it runs over odd n coprime to a with q1 = exp(2 pi i tau / 4).
At tau = 1/|a| the series repeats, and one block of it (``fbar``) is what
this module evaluates.

All symbol coefficients are exact integers. Floating point enters only when
a root of unity exp(2 pi i k / m) is evaluated, and k is reduced mod m first.
Sums go through ``math.fsum`` componentwise, in ascending index order.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import (
    DomainError,
    NonConvergentTau,
    OracleScaleExceeded,
    UnsupportedCongruenceClass,
    UnsupportedTau,
)
from .indexmap import m_to_n
from .modarith import check_prime, is_prime
from .symbols import kronecker, legendre

MAX_TERMS = 10_000
# a = 2 (mod 4) values whose closed form is known to hold
VERIFIED_EVEN_A = frozenset({2, -2, 6, -6, 10, -10})


def tolerance(scale: int) -> float:
    """Comparison tolerance for sums over ``scale`` terms."""
    return 1e-8 if scale <= 500 else 1e-6


def root_of_unity(k: int, m: int) -> complex:
    """exp(2 pi i k / m), with k reduced mod m before going to floats."""
    k %= m
    if k == 0:
        return 1 + 0j
    return cmath.exp(2j * math.pi * k / m)


def csum(values: Iterable[complex]) -> complex:
    values = list(values)
    return complex(math.fsum(z.real for z in values), math.fsum(z.imag for z in values))


def _odd_prime(p: int) -> int:
    check_prime(p)
    if p == 2:
        raise DomainError("Gaussian sums here need an odd prime")
    if p > MAX_TERMS:
        raise OracleScaleExceeded(f"p = {p} above {MAX_TERMS}")
    return p


def gauss_sum_character(p: int) -> complex:
    _odd_prime(p)
    return csum(legendre(n, p) * root_of_unity(n, p) for n in range(1, p))


def gauss_sum_quadratic(p: int) -> complex:
    _odd_prime(p)
    return csum(root_of_unity(m * m, p) for m in range(p))


def closed_form_gp(p: int) -> complex:
    check_prime(p)
    if p == 2:
        raise DomainError("closed form needs an odd prime")
    r = math.sqrt(p)
    return complex(r, 0) if p % 4 == 1 else complex(0, r)


def residue_periods(p: int) -> tuple[complex, complex]:
    """(I, J): sums of exp(2 pi i r / p) over the residues and the nonresidues."""
    _odd_prime(p)
    squares = {m * m % p for m in range(1, p)}
    i_sum = csum(root_of_unity(r, p) for r in range(1, p) if r in squares)
    j_sum = csum(root_of_unity(r, p) for r in range(1, p) if r not in squares)
    return i_sum, j_sum


@dataclass(frozen=True)
class PeriodSumResult:
    a: int
    value: complex
    period: int  # length of the block of n that makes up one period
    nome: str  # "q" or "q1"
    terms: tuple[tuple[int, int], ...]  # (n, coefficient)
    closed_form: complex | None = None

    def render(self) -> str:
        """Polynomial in the nome, e.g. ``q1+q1^5-q1^7-q1^11``."""
        out = []
        for n, c in self.terms:
            if c == 0:
                continue
            mono = self.nome if n == 1 else f"{self.nome}^{n}"
            sign = "+" if c > 0 else "-"
            out.append(mono if not out and c > 0 else sign + mono)
        return "".join(out) or "0"


def _check_a(a: int) -> None:
    if a == 0 or a % 4 == 0:
        raise UnsupportedCongruenceClass(f"a = {a} is 0 mod 4")
    if abs(a) > MAX_TERMS:
        raise OracleScaleExceeded(f"|a| = {abs(a)} above {MAX_TERMS}")


def nome_kind(a: int) -> str:
    _check_a(a)
    return "q" if a % 4 == 1 else "q1"


def closed_form_for(a: int) -> complex | None:
    """sqrt(a) for a > 0, i sqrt|a| for a < 0, where that value is established."""
    if not (is_prime(abs(a)) or a in VERIFIED_EVEN_A):
        return None
    r = math.sqrt(abs(a))
    return complex(r, 0) if a > 0 else complex(0, r)


def fbar(a: int) -> PeriodSumResult:
    _check_a(a)
    m = abs(a)
    if a % 4 == 1:
        # one full block n = 1..|a|; the n = |a| coefficient vanishes unless |a| = 1
        terms = tuple((n, kronecker(n, m)) for n in range(1, m + 1))
        value = csum(c * root_of_unity(n, m) for n, c in terms)
        return PeriodSumResult(a, value, m, "q", terms, closed_form_for(a))
    terms = tuple(
        (n, kronecker(a, n)) for n in range(1, 2 * m, 2) if math.gcd(n, m) == 1
    )
    value = csum(c * root_of_unity(n, 4 * m) for n, c in terms)
    return PeriodSumResult(a, value, 2 * m, "q1", terms, closed_form_for(a))


def fbar_via_index_map(a: int) -> complex:
    """The a = 3 (mod 4) block rewritten over m = 1..|a|-1.

    Each odd n is traded for (m, l) with n = 4m - |a|(2l - 1); the term
    (a/n) q1^n then becomes (m/|a|) * sign(l) * i(-1)^l * exp(2 pi i m/|a|).
    """
    if a % 4 != 3 or abs(a) < 3:
        raise UnsupportedCongruenceClass(f"a = {a} is not 3 mod 4 with |a| >= 3")
    if abs(a) > MAX_TERMS:
        raise OracleScaleExceeded(f"|a| = {abs(a)} above {MAX_TERMS}")
    m_abs = abs(a)
    parts = []
    for m in range(1, m_abs):
        ell = m_to_n(m, m_abs).ell
        # (-1)^((n-1)/2) is (-1)^(l+1) when |a| = 3 mod 4 and (-1)^l when |a| = 1 mod 4
        sign = (-1) ** (ell + 1) if a > 0 else (-1) ** ell
        unit = 1j * (-1) ** ell
        parts.append(kronecker(m, m_abs) * sign * unit * root_of_unity(m, m_abs))
    return csum(parts)


def quad_exp_sum(a: int) -> complex:
    if a % 4 != 2:
        raise UnsupportedCongruenceClass(f"a = {a} is not 2 mod 4")
    if abs(a) > MAX_TERMS:
        raise OracleScaleExceeded(f"|a| = {abs(a)} above {MAX_TERMS}")
    m = abs(a)
    s = csum(root_of_unity(n * n, 4 * m) for n in range(2 * m))
    prefactor = 1 / (1 + 1j) if a > 0 else 1j / (1 + 1j)
    return prefactor * s


def partial_f(a: int, tau: Fraction, num_periods: int) -> list[complex]:
    """Consecutive block sums of the truncated series at tau = 1/|a|.

    Coefficients are (a/n) taken straight from the series definition, so
    block equality with ``fbar`` is a real check rather than a tautology.
    """
    _check_a(a)
    m = abs(a)
    if Fraction(tau) != Fraction(1, m):
        raise UnsupportedTau(f"tau must be 1/{m}, got {tau}")
    if num_periods < 1:
        raise DomainError("num_periods must be positive")
    if a % 4 == 1:
        length, den = m, m

        def keep(n):
            return True
    else:
        length, den = 2 * m, 4 * m

        def keep(n):
            return math.gcd(n, 4 * m) == 1

    blocks = []
    for k in range(num_periods):
        lo = k * length + 1
        blocks.append(
            csum(
                kronecker(a, n) * root_of_unity(n, den)
                for n in range(lo, lo + length)
                if keep(n)
            )
        )
    return blocks


def _square_series(tau: complex, terms: int) -> complex:
    if tau.imag <= 0:
        raise NonConvergentTau(f"Im tau must be positive, got {tau.imag}")
    if terms < 0:
        raise DomainError("terms must be non-negative")
    parts = []
    for n in range(1, terms + 1):
        n2 = n * n
        phase = math.fmod(n2 * tau.real, 1.0)
        parts.append(math.exp(-2 * math.pi * n2 * tau.imag) * cmath.exp(2j * math.pi * phase))
    return csum(parts)


def theta_partial(tau_im: float, tau_re: float = 0.0, terms: int = 50) -> complex:
    """1 + sum_{n=1}^{terms} exp(2 pi i n^2 tau)."""
    return 1 + _square_series(complex(tau_re, tau_im), terms)


def theta_char_partial(tau_im: float, tau_re: float = 0.0, terms: int = 50) -> complex:
    """The theta constant 1 + 2 sum_{n=1}^{terms} exp(2 pi i n^2 tau)."""
    return 1 + 2 * _square_series(complex(tau_re, tau_im), terms)


def character_series_gap(p: int, tau_im: float, tau_re: float, terms: int) -> complex:
    """Truncated sum (n/p) e(n tau) minus truncated sum e(m^2 tau), m from 0.

    The two series agree as one-period sums at tau = 1/p but not as q-series;
    this reports how far apart their truncations are at a given tau.
    """
    _odd_prime(p)
    tau = complex(tau_re, tau_im)
    if tau.imag <= 0:
        raise NonConvergentTau(f"Im tau must be positive, got {tau.imag}")
    char = csum(legendre(n, p) * cmath.exp(2j * math.pi * n * tau) for n in range(1, terms + 1))
    return char - theta_partial(tau_im, tau_re, terms)
