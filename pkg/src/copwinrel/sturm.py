"""Exact real-root counting with Sturm sequences over the rationals.

Sequences are built from the squarefree part ``p / gcd(p, p')``; every chain
element is stored as a primitive integer polynomial scaled by a positive
constant, so signs at rational points are computed in pure integer
arithmetic.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import zip_longest
from typing import Iterable, Sequence

from .poly import CoeffPoly, format_poly

Number = int | Fraction


class RatPoly:
    """Polynomial with ``Fraction`` coefficients in ascending order, trailing zeros removed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()) -> None:
        c = [Fraction(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def from_coeffpoly(cls, p: CoeffPoly) -> RatPoly:
        return cls(p.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RatPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: RatPoly) -> RatPoly:
        return RatPoly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    def __sub__(self, other: RatPoly) -> RatPoly:
        return RatPoly(a - b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    def __neg__(self) -> RatPoly:
        return RatPoly(-a for a in self.coeffs)

    def __mul__(self, other: RatPoly | Number) -> RatPoly:
        if not isinstance(other, RatPoly):
            return RatPoly(a * other for a in self.coeffs)
        if not self or not other:
            return RatPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RatPoly(out)

    def __call__(self, x: Number) -> Fraction:
        acc = Fraction(0)
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def derivative(self) -> RatPoly:
        return RatPoly(k * a for k, a in enumerate(self.coeffs) if k)

    def monic(self) -> RatPoly:
        return self * (1 / self.lc) if self else self

    def divmod(self, d: RatPoly) -> tuple[RatPoly, RatPoly]:
        if not d:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        q = [Fraction(0)] * max(0, len(r) - len(d.coeffs) + 1)
        dl = d.lc
        dd = d.degree
        for k in range(len(r) - 1 - dd, -1, -1):
            c = r[k + dd] / dl
            q[k] = c
            if c:
                for j, b in enumerate(d.coeffs):
                    r[k + j] -= c * b
        return RatPoly(q), RatPoly(r[:dd])

    def __floordiv__(self, d: RatPoly) -> RatPoly:
        return self.divmod(d)[0]

    def __mod__(self, d: RatPoly) -> RatPoly:
        return self.divmod(d)[1]

    def __repr__(self) -> str:
        return f"RatPoly({[str(a) for a in self.coeffs]})"

    def __str__(self) -> str:
        return format_poly(self.coeffs)


def poly_gcd(a: RatPoly, b: RatPoly) -> RatPoly:
    while b:
        a, b = b, a % b
    return a.monic()


def squarefree_decomposition(p: RatPoly) -> list[tuple[RatPoly, int]]:
    """Yun's algorithm: monic squarefree, pairwise coprime ``f_i`` with ``p = lc * prod f_i**i``.

    Only non-constant factors are returned.
    """
    if not p:
        raise ValueError("zero polynomial has no squarefree decomposition")
    out: list[tuple[RatPoly, int]] = []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p // a
    c = dp // a
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        f = poly_gcd(b, d)
        b = b // f
        c = d // f
        d = c - b.derivative()
        if f.degree > 0:
            out.append((f, i))
        i += 1
    return out


def squarefree_part(p: RatPoly) -> RatPoly:
    if not p:
        raise ValueError("zero polynomial")
    if p.degree <= 0:
        return RatPoly([1])
    return (p // poly_gcd(p, p.derivative())).monic()


# -- integer-normalised chain -------------------------------------------------

def _primitive(p: RatPoly) -> tuple[int, ...]:
    """Positive rational multiple of ``p`` with coprime integer coefficients."""
    den = 1
    for a in p.coeffs:
        den = den * a.denominator // math.gcd(den, a.denominator)
    ints = [int(a * den) for a in p.coeffs]
    g = 0
    for a in ints:
        g = math.gcd(g, a)
    return tuple(a // g for a in ints) if g > 1 else tuple(ints)


def _sign(x: int | Fraction) -> int:
    return (x > 0) - (x < 0)


def _sign_at(coeffs: Sequence[int], x: Number | float) -> int:
    """Sign of the integer polynomial at a rational point or at +/-inf."""
    if not coeffs:
        return 0
    if x == math.inf:
        return _sign(coeffs[-1])
    if x == -math.inf:
        return _sign(coeffs[-1]) * (-1) ** (len(coeffs) - 1)
    x = Fraction(x)
    num, den = x.numerator, x.denominator
    # homogeneous Horner: sum a_k num^k den^(d-k), den > 0
    acc = 0
    dpow = 1
    for a in reversed(coeffs):
        acc = acc * num + a * dpow
        dpow *= den
    return _sign(acc)


class SturmChain:
    """Sturm sequence of the squarefree part of a nonzero polynomial."""

    def __init__(self, p: RatPoly) -> None:
        if not p:
            raise ValueError("Sturm sequence of the zero polynomial is undefined")
        s = squarefree_part(p)
        self.base = s
        chain = [s, s.derivative()]
        while chain[-1] and chain[-1].degree > 0:
            r = -(chain[-2] % chain[-1])
            if not r:
                break
            chain.append(r)
        self.chain = [_primitive(q) for q in chain if q]

    def variations(self, x: Number | float) -> int:
        signs = [s for s in (_sign_at(c, x) for c in self.chain) if s]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def count(self, a: Number | float, b: Number | float) -> int:
        """Distinct real roots in the half-open interval ``(a, b]``."""
        if not a < b:
            raise ValueError(f"empty interval ({a}, {b}]")
        return self.variations(a) - self.variations(b)

    def is_root(self, x: Number) -> bool:
        return _sign_at(self.chain[0], x) == 0

    def count_open(self, a: Number | float, b: Number | float) -> int:
        n = self.count(a, b)
        if b != math.inf and self.is_root(b):
            n -= 1
        return n


def sturm_root_count(p: RatPoly | CoeffPoly, a: Number | float, b: Number | float) -> int:
    """Number of distinct real roots of ``p`` in ``(a, b]``; ``b`` may be ``math.inf``."""
    if isinstance(p, CoeffPoly):
        p = RatPoly.from_coeffpoly(p)
    if not p:
        raise ValueError("zero polynomial has infinitely many roots")
    return SturmChain(p).count(a, b)


def _nonroot_between(chain: SturmChain, lo: Fraction, hi: Fraction) -> Fraction:
    for num, den in ((1, 2), (3, 7), (4, 7), (2, 7), (5, 7), (1, 3), (2, 3)):
        m = lo + (hi - lo) * Fraction(num, den)
        if not chain.is_root(m):
            return m
    k = 11
    while True:
        m = lo + (hi - lo) / k
        if not chain.is_root(m):
            return m
        k += 2


def isolate_roots(p: RatPoly | CoeffPoly, lo: Number = 0, hi: Number = 1) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals ``(l, r)``, each holding exactly one root of ``p`` in the open ``(lo, hi)``.

    Every returned endpoint is a non-root, so ``p``'s sign there is strict.
    """
    if isinstance(p, CoeffPoly):
        p = RatPoly.from_coeffpoly(p)
    chain = SturmChain(p)
    lo, hi = Fraction(lo), Fraction(hi)
    total = chain.count_open(lo, hi)
    if total == 0:
        return []
    # shrink inward from the endpoints until the margins are root-free
    width = (hi - lo) / 2
    while True:
        l = lo + width
        if not chain.is_root(l) and chain.count(lo, l) == 0:
            break
        width /= 2
    width = (hi - lo) / 2
    while True:
        r = hi - width
        if not chain.is_root(r) and chain.count_open(r, hi) == 0 and r > l:
            break
        width /= 2
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(l, r)]
    while stack:
        a, b = stack.pop()
        k = chain.count(a, b)
        if k == 0:
            continue
        if k == 1:
            out.append((a, b))
            continue
        m = _nonroot_between(chain, a, b)
        stack.append((m, b))
        stack.append((a, m))
    out.sort()
    return out
