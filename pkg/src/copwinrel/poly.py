"""Dense univariate polynomials with exact integer coefficients."""

from __future__ import annotations

from fractions import Fraction
from itertools import zip_longest
from math import comb
from typing import Iterable, Sequence


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class CoeffPoly:
    """Polynomial ``sum(coeffs[k] * x**k)``; the zero polynomial has no coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        c = _trim(coeffs)
        for a in c:
            if not isinstance(a, int):
                raise TypeError(f"coefficient {a!r} is not an integer")
        self.coeffs = c

    @classmethod
    def from_counts(cls, counts: Sequence[int]) -> CoeffPoly:
        """``counts[i]`` becomes the coefficient of ``x**(i+1)`` (constant term 0)."""
        return cls((0, *counts))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> CoeffPoly:
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CoeffPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: CoeffPoly) -> CoeffPoly:
        return CoeffPoly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    def __sub__(self, other: CoeffPoly) -> CoeffPoly:
        return CoeffPoly(a - b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    def __neg__(self) -> CoeffPoly:
        return CoeffPoly(-a for a in self.coeffs)

    def __mul__(self, other: CoeffPoly | int) -> CoeffPoly:
        if isinstance(other, int):
            return CoeffPoly(a * other for a in self.coeffs)
        if not self or not other:
            return CoeffPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return CoeffPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int = 1) -> CoeffPoly:
        """Multiply by ``x**k``."""
        return CoeffPoly((0,) * k + self.coeffs) if self else self

    def __call__(self, x):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def counts(self) -> list[int]:
        """Coefficients of ``x**1 .. x**degree`` (the count-vector view)."""
        return list(self.coeffs[1:])

    def __repr__(self) -> str:
        return f"CoeffPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        return format_poly(self.coeffs)


def format_poly(coeffs: Sequence, var: str = "x") -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        a = coeffs[k]
        if a == 0:
            continue
        sign = "-" if a < 0 else "+"
        mag = -a if a < 0 else a
        if k == 0:
            body = f"{mag}"
        else:
            head = "" if mag == 1 else f"{mag}*"
            body = head + (var if k == 1 else f"{var}^{k}")
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def coeff_dominates(a: CoeffPoly, b: CoeffPoly) -> bool:
    """True iff ``b`` is coefficient-wise at most ``a`` and ``deg b <= deg a``."""
    if b.degree > a.degree:
        return False
    return all(b[k] <= a[k] for k in range(len(a.coeffs)))


def binomial_form(counts: Sequence[int], n: int, start: int = 1) -> CoeffPoly:
    """Expand ``sum_i counts[i-start] * p**i * (1-p)**(n-i)`` into the monomial basis."""
    out = [0] * (n + 1)
    for i, c in enumerate(counts, start=start):
        if not c:
            continue
        r = n - i
        for j in range(r + 1):
            out[i + j] += c * comb(r, j) * (-1) ** j
    return CoeffPoly(out)


def evaluate_binomial_form(counts: Sequence[int], n: int, p: Fraction) -> Fraction:
    q = 1 - p
    return sum((c * p**i * q ** (n - i) for i, c in enumerate(counts, start=1)), Fraction(0))
