"""Dense univariate polynomials over the rationals.

Coefficients are stored lowest degree first, ``coeffs[i]`` multiplying
``z**i``, and are always reduced :class:`~fractions.Fraction` values.
Trailing zeros are stripped, so the zero polynomial has ``coeffs == ()``
and degree ``-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


@dataclass(frozen=True)
class RationalPoly:
    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __call__(self, x) -> Fraction:
        return evaluate(self, x)

    def scale(self, c) -> RationalPoly:
        c = Fraction(c)
        return RationalPoly(c * a for a in self.coeffs)

    def __str__(self):
        return format_poly(self)


def evaluate(P: RationalPoly, x) -> Fraction:
    """Horner evaluation, exact."""
    x = Fraction(x)
    acc = Fraction(0)
    for a in reversed(P.coeffs):
        acc = acc * x + a
    return acc


def derivative(P: RationalPoly) -> RationalPoly:
    if P.degree < 1:
        raise ValueError("constant has no derivative roots")
    return RationalPoly(k * a for k, a in enumerate(P.coeffs) if k > 0)


def from_roots(roots: Iterable, leading=1) -> RationalPoly:
    """Expand ``leading * prod(z - r for r in roots)``."""
    leading = Fraction(leading)
    if leading == 0:
        raise ValueError("leading coefficient must be nonzero")
    cs = [leading]
    for r in roots:
        r = Fraction(r)
        # multiply by (z - r)
        nxt = [Fraction(0)] * (len(cs) + 1)
        for i, a in enumerate(cs):
            nxt[i + 1] += a
            nxt[i] -= r * a
        cs = nxt
    return RationalPoly(cs)


def taylor_shift(P: RationalPoly, a) -> RationalPoly:
    """Return ``Q`` with ``Q(z) == P(z + a)``.

    Repeated synthetic division by ``z - a``; the successive remainders are
    the coefficients of ``Q``.
    """
    a = Fraction(a)
    cs = list(P.coeffs)
    if a == 0 or len(cs) <= 1:
        return RationalPoly(cs)
    n = len(cs) - 1
    for i in range(n):
        for j in range(n - 1, i - 1, -1):
            cs[j] += a * cs[j + 1]
    return RationalPoly(cs)


def elementary_symmetric(roots: Sequence, k: int) -> Fraction:
    """Sum of all products of ``k`` roots taken at distinct positions."""
    roots = [Fraction(r) for r in roots]
    if not 0 <= k <= len(roots):
        raise ValueError(f"k={k} out of range for {len(roots)} roots")
    e = [Fraction(1)] + [Fraction(0)] * k
    for r in roots:
        for j in range(k, 0, -1):
            e[j] += r * e[j - 1]
    return e[k]


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not text:
        raise ValueError("empty rational literal")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed rational {text!r}") from exc


def parse_poly(text: str) -> RationalPoly:
    """Parse ``"a0,a1,...,an"`` (lowest degree first), e.g. ``"0,0,-1,1"``."""
    parts = text.split(",")
    return RationalPoly(parse_rational(t) for t in parts)


def format_poly(P: RationalPoly) -> str:
    """Inverse of :func:`parse_poly`; the zero polynomial prints as ``"0"``."""
    if P.is_zero():
        return "0"
    return ",".join(str(c) for c in P.coeffs)
