"""Newton polygons and the p-adic norms of roots.

A hull segment of slope ``s`` and width ``w`` accounts for ``w`` roots (in an
algebraic closure of Q_p) of valuation ``-s``. Roots equal to zero are
counted separately through the lowest nonzero coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polynomial import RationalPoly, taylor_shift
from .valuation import INF, ExtendedValuation, valuation_of_rational


@dataclass(frozen=True)
class NewtonPolygon:
    vertices: tuple[tuple[int, Fraction], ...]
    zero_root_count: int

    @property
    def degree(self) -> int:
        return self.vertices[-1][0]

    def segments(self):
        """Yield ``(slope, width)`` for consecutive vertices, left to right."""
        for (i, u), (j, v) in zip(self.vertices, self.vertices[1:]):
            yield (v - u) / (j - i), j - i

    def slopes(self) -> list[Fraction]:
        return [s for s, _ in self.segments()]


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _check(P: RationalPoly):
    if P.is_zero():
        raise ValueError("zero polynomial has no Newton polygon")
    if P.degree < 1:
        raise ValueError("Newton polygon needs degree >= 1")


def build_polygon(P: RationalPoly, p) -> NewtonPolygon:
    """Lower convex hull of ``(i, v_p(a_i))`` over nonzero coefficients."""
    _check(P)
    pts = [(i, valuation_of_rational(a, p)) for i, a in enumerate(P.coeffs) if a != 0]
    hull: list[tuple[int, Fraction]] = []
    for q in pts:
        # keep only strict left turns so collinear points are dropped
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], q) <= 0:
            hull.pop()
        hull.append(q)
    return NewtonPolygon(tuple(hull), pts[0][0])


def valuations_from_polygon(poly: NewtonPolygon) -> tuple[ExtendedValuation, ...]:
    vals: list[ExtendedValuation] = [INF] * poly.zero_root_count
    for slope, width in poly.segments():
        vals.extend([-slope] * width)
    vals.sort(reverse=True)
    return tuple(vals)


def root_valuations(P: RationalPoly, p) -> tuple[ExtendedValuation, ...]:
    """Valuations of all ``deg P`` roots with multiplicity, largest first.

    Largest valuation first is smallest norm first.
    """
    return valuations_from_polygon(build_polygon(P, p))


def min_enclosing_valuation(P: RationalPoly, p, center) -> ExtendedValuation:
    """Valuation of the smallest closed disk about ``center`` holding every root."""
    return min(root_valuations(taylor_shift(P, center), p))


def count_in_disk(vals, radius_val: ExtendedValuation) -> int:
    return sum(1 for v in vals if v >= radius_val)


def count_roots_in_disk(P: RationalPoly, p, center, radius_val: ExtendedValuation) -> int:
    """Number of roots ``z`` (with multiplicity) with ``|z - center| <= p**(-radius_val)``."""
    return count_in_disk(root_valuations(taylor_shift(P, center), p), radius_val)
