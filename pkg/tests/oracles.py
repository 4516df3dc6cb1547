"""Independent brute-force checks, kept apart from the library code paths."""

from fractions import Fraction
from itertools import combinations
from math import isqrt, prod


def vp_int(n, p):
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def vp(x, p):
    """Valuation by repeated division; ``None`` for zero."""
    x = Fraction(x)
    if x == 0:
        return None
    return vp_int(x.numerator, p) - vp_int(x.denominator, p)


def esym_bruteforce(roots, k):
    return sum((prod(c, start=Fraction(1)) for c in combinations(roots, k)), Fraction(0))


def root_vals_bruteforce(roots, p, center=0):
    """Sorted (largest first) list; ``float('inf')`` stands for zero."""
    out = []
    for r in roots:
        v = vp(Fraction(r) - Fraction(center), p)
        out.append(float("inf") if v is None else Fraction(v))
    return sorted(out, reverse=True)


def rational_sqrt(q):
    q = Fraction(q)
    if q < 0:
        return None
    a, b = isqrt(q.numerator), isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


def rational_roots_low_degree(coeffs):
    """All roots of ``c0 + c1 z (+ c2 z^2)`` if they are rational, else ``None``."""
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    if len(cs) == 2:
        return [-cs[0] / cs[1]]
    if len(cs) == 3:
        c, b, a = cs
        s = rational_sqrt(b * b - 4 * a * c)
        if s is None:
            return None
        return [(-b - s) / (2 * a), (-b + s) / (2 * a)]
    raise ValueError("only degrees 1 and 2 are supported")


def expand_bruteforce(roots, leading=1):
    """Coefficients (lowest first) by summing over subsets of the roots."""
    n = len(roots)
    return [Fraction(leading) * (-1) ** (n - k) * esym_bruteforce(roots, n - k) for k in range(n + 1)]


def to_finite(vals):
    """Map a library valuation tuple onto the oracle's representation."""
    from padic_gl import INF

    return [float("inf") if v is INF else Fraction(v) for v in vals]
