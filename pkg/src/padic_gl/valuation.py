"""p-adic valuations of rationals, extended by +infinity for zero.

A finite valuation is a :class:`fractions.Fraction` (or ``int``); the
valuation of zero is the singleton :data:`INF`, which compares greater than
every finite value and absorbs addition.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Union


class _Infinity:
    """The valuation of zero. Use the module singleton :data:`INF`."""

    _instance: _Infinity | None = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "+inf"

    def __reduce__(self):
        return (_Infinity, ())

    def __hash__(self):
        return hash("padic_gl.INF")

    def __eq__(self, other):
        return other is self

    def __ne__(self, other):
        return other is not self

    def __lt__(self, other):
        if other is self or isinstance(other, Rational):
            return False
        return NotImplemented

    def __le__(self, other):
        if other is self:
            return True
        if isinstance(other, Rational):
            return False
        return NotImplemented

    def __gt__(self, other):
        if other is self:
            return False
        if isinstance(other, Rational):
            return True
        return NotImplemented

    def __ge__(self, other):
        if other is self or isinstance(other, Rational):
            return True
        return NotImplemented

    def __add__(self, other):
        if other is self or isinstance(other, Rational):
            return self
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if other is self:
            raise ArithmeticError("INF - INF is undefined")
        if isinstance(other, Rational):
            return self
        return NotImplemented

    def __mul__(self, other):
        # only scaling by positive integers is meaningful on the valuation scale
        if isinstance(other, Rational) and other > 0:
            return self
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Rational) and other > 0:
            return self
        return NotImplemented


INF = _Infinity()

ExtendedValuation = Union[Fraction, _Infinity]


def is_finite(v) -> bool:
    return v is not INF


class Prime(int):
    """A rational prime, checked by trial division on construction."""

    def __new__(cls, p):
        if isinstance(p, bool) or int(p) != p:
            raise ValueError(f"not an integer: {p!r}")
        p = int(p)
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        return super().__new__(cls, p)

    def __repr__(self):
        return f"Prime({int(self)})"

    __str__ = int.__repr__


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _int_valuation(n: int, p: int) -> int:
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def valuation_of_rational(x, p) -> ExtendedValuation:
    """Return ``v_p(x)``, so that ``|x|_p = p**(-v_p(x))``; ``INF`` for zero.

    >>> valuation_of_rational(Fraction(2, 3), 3)
    Fraction(-1, 1)
    """
    x = Fraction(x)
    if x == 0:
        return INF
    return Fraction(_int_valuation(x.numerator, p) - _int_valuation(x.denominator, p))


def val_mul(u: ExtendedValuation, v: ExtendedValuation) -> ExtendedValuation:
    """Valuation of a product: ``u + v`` with ``INF`` absorbing."""
    if u is INF or v is INF:
        return INF
    return Fraction(u) + Fraction(v)


def val_add_lower_bound(u: ExtendedValuation, v: ExtendedValuation) -> ExtendedValuation:
    """Lower bound ``min(u, v)`` for the valuation of a sum.

    The bound is attained whenever ``u != v``.
    """
    if u is INF:
        return v
    if v is INF:
        return u
    return min(Fraction(u), Fraction(v))


def format_valuation(v: ExtendedValuation) -> str:
    return "+inf" if v is INF else str(Fraction(v))


def parse_valuation(text: str) -> ExtendedValuation:
    t = text.strip().lower()
    if t in ("inf", "+inf", "infinity", "+infinity"):
        return INF
    return Fraction(t)


def norm_string(v: ExtendedValuation, p: int) -> str:
    """Render ``p**(-v)`` as ``"p^e"``; ``"0"`` for ``INF``."""
    if v is INF:
        return "0"
    e = -Fraction(v)
    return f"{p}^{e}"
