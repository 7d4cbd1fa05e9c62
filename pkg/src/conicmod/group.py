"""Group law on the affine conic y^2 = a x^2 + 1 over F_p.

The sum of (x1, y1) and (x2, y2) is (x1 y2 + y1 x2, y1 y2 + a x1 x2), the
sine/cosine addition rule in disguise. The unit is (0, 1). The map
(x, y) -> y + x sqrt(a) turns the law into plain multiplication, which is how
cyclicity is seen: it lands in F_p* when a is a square and in the norm-one
subgroup of F_p(sqrt a)* otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass

from .conic import ORACLE_MAX_P, Curve, count_formula, enumerate_solutions
from .errors import CurveMismatch, NotFound, NotOnCurve, OracleScaleExceeded
from .modarith import Fp2Elem, sqrt_mod_scan
from .symbols import legendre


@dataclass(frozen=True, order=True)
class Point:
    x: int
    y: int
    curve: Curve

    def __post_init__(self):
        p = self.curve.p
        object.__setattr__(self, "x", self.x % p)
        object.__setattr__(self, "y", self.y % p)
        if (self.y * self.y - self.curve.a * self.x * self.x - 1) % p:
            raise NotOnCurve(f"({self.x}, {self.y}) is not on {self.curve}")

    @property
    def xy(self) -> tuple[int, int]:
        return (self.x, self.y)

    def __add__(self, other: Point) -> Point:
        return add(self, other)

    def __neg__(self) -> Point:
        return neg(self)

    def __rmul__(self, k: int) -> Point:
        return scalar_mul(k, self)


def identity(c: Curve) -> Point:
    return Point(0, 1, c)


def add(P: Point, Q: Point) -> Point:
    if P.curve != Q.curve:
        raise CurveMismatch(f"{P.curve} vs {Q.curve}")
    c = P.curve
    return Point(
        (P.x * Q.y + P.y * Q.x) % c.p,
        (P.y * Q.y + c.a * P.x * Q.x) % c.p,
        c,
    )


def neg(P: Point) -> Point:
    return Point(-P.x, P.y, P.curve)


def scalar_mul(k: int, P: Point) -> Point:
    if k < 0:
        return scalar_mul(-k, neg(P))
    result = identity(P.curve)
    addend = P
    while k:
        if k & 1:
            result = add(result, addend)
        addend = add(addend, addend)
        k >>= 1
    return result


def group_order(c: Curve) -> int:
    return count_formula(c).N


def _prime_factors(n: int) -> list[int]:
    factors = []
    q = 2
    while q * q <= n:
        if n % q == 0:
            factors.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        factors.append(n)
    return factors


def element_order(P: Point) -> int:
    """Order of P, found by walking down the divisor lattice of the group order."""
    order = group_order(P.curve)
    e = identity(P.curve)
    for q in _prime_factors(order):
        while order % q == 0 and scalar_mul(order // q, P) == e:
            order //= q
    return order


def find_generator(c: Curve) -> Point:
    """First point, in lexicographic order, whose order is the full group order."""
    n = group_order(c)
    for x, y in enumerate_solutions(c):
        P = Point(x, y, c)
        if element_order(P) == n:
            return P
    raise NotFound(f"no generator of order {n} on {c}")


@dataclass(frozen=True)
class ZEmbedding:
    curve: Curve
    residue_case: bool
    s: int | None = None

    @property
    def d(self) -> int:
        return self.curve.a % self.curve.p


def make_embedding(c: Curve) -> ZEmbedding:
    if legendre(c.a, c.p) == 1:
        if c.p > ORACLE_MAX_P:
            raise OracleScaleExceeded("square-root scan limited to p <= 10^4")
        s = sqrt_mod_scan(c.a, c.p)
        return ZEmbedding(c, True, s)
    return ZEmbedding(c, False)


def z_embed(P: Point, emb: ZEmbedding) -> Fp2Elem:
    if P.curve != emb.curve:
        raise CurveMismatch(f"{P.curve} vs {emb.curve}")
    p = P.curve.p
    if emb.residue_case:
        return Fp2Elem(emb.s * P.x + P.y, 0, emb.d, p)
    return Fp2Elem(P.y, P.x, emb.d, p)


@dataclass(frozen=True)
class CyclicityCertificate:
    curve: Curve
    N: int
    generator: Point
    chain: tuple[Point, ...]  # [1]G, [2]G, ..., [N]G = E


def verify_cyclic(c: Curve) -> CyclicityCertificate:
    n = group_order(c)
    g = find_generator(c)
    chain = []
    cur = g
    for _ in range(n):
        chain.append(cur)
        cur = add(cur, g)
    points = enumerate_solutions(c)
    if chain[-1] != identity(c) or sorted(q.xy for q in chain) != points:
        raise NotFound(f"multiples of {g.xy} do not cover the {len(points)} solutions")
    return CyclicityCertificate(c, n, g, tuple(chain))
