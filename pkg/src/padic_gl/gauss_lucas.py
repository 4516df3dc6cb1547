"""Critical-point disk bounds for p-adic polynomials and their verification.

If every root of ``P`` (degree ``n``) lies in the closed disk ``D(a, r)``, the
disk ``D(a, r_k)`` holds at least ``k`` roots of ``P'``, where

    r_k = r * max(|j/n| ** (1/(n-j)) for j in 1..k).

Everything here works with valuations, so ``r_k`` becomes

    val(r_k) = val(r) + min((v_p(j) - v_p(n)) / (n - j) for j in 1..k).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .newton_polygon import count_in_disk, root_valuations
from .polynomial import RationalPoly, derivative, taylor_shift
from .valuation import INF, ExtendedValuation, Prime, valuation_of_rational


@dataclass(frozen=True)
class CriticalRadii:
    prime: int
    degree: int
    base_val: ExtendedValuation
    radii_vals: tuple[ExtendedValuation, ...]


@dataclass(frozen=True)
class KReport:
    k: int
    bound_val: ExtendedValuation
    count_in_disk: int
    holds: bool
    tight: bool


@dataclass(frozen=True)
class TheoremReport:
    prime: int
    degree: int
    base_val: ExtendedValuation
    per_k: tuple[KReport, ...]
    all_hold: bool
    c1_val: ExtendedValuation
    c2_val: ExtendedValuation
    corollary1_holds: bool
    corollary2_holds: bool
    corollary3_applicable: bool
    corollary3_holds: bool

    @property
    def failing_k(self) -> list[int]:
        return [r.k for r in self.per_k if not r.holds]

    @property
    def tight(self) -> bool:
        return any(r.tight for r in self.per_k)


def _need_degree(n: int):
    if n <= 1:
        raise ValueError("theorem requires degree >= 2")


def _shifted_exponents(n: int, p) -> list[Fraction]:
    vn = valuation_of_rational(n, p)
    out = []
    best = None
    for j in range(1, n):
        e = (valuation_of_rational(j, p) - vn) / (n - j)
        best = e if best is None else min(best, e)
        out.append(best)
    return out


def critical_radii(n: int, base_val: ExtendedValuation, p) -> CriticalRadii:
    _need_degree(n)
    p = Prime(p)
    radii = tuple(base_val + e for e in _shifted_exponents(n, p))
    return CriticalRadii(int(p), n, base_val, radii)


def corollary_bounds(n: int, base_val: ExtendedValuation, p):
    """Return ``(c1_val, c2_val, c3_applicable)``.

    ``c1_val`` is the disk holding at least one critical point, ``c2_val``
    the disk holding all of them; when ``p`` does not divide ``n`` the
    enclosing disk itself already holds every critical point.
    """
    _need_degree(n)
    vn = valuation_of_rational(n, Prime(p))
    return base_val - vn / (n - 1), base_val - vn, vn == 0


def _report(P: RationalPoly, p, center, base_val) -> TheoremReport:
    n = P.degree
    radii = critical_radii(n, base_val, p)
    c1, c2, c3 = corollary_bounds(n, base_val, p)
    crit = root_valuations(taylor_shift(derivative(P), center), p)
    per_k = []
    for k, bound in enumerate(radii.radii_vals, start=1):
        cnt = count_in_disk(crit, bound)
        holds = cnt >= k
        per_k.append(KReport(k, bound, cnt, holds, holds and crit[k - 1] == bound))
    return TheoremReport(
        prime=int(p),
        degree=n,
        base_val=base_val,
        per_k=tuple(per_k),
        all_hold=all(r.holds for r in per_k),
        c1_val=c1,
        c2_val=c2,
        corollary1_holds=count_in_disk(crit, c1) >= 1,
        corollary2_holds=count_in_disk(crit, c2) == n - 1,
        corollary3_applicable=c3,
        corollary3_holds=(not c3) or count_in_disk(crit, base_val) == n - 1,
    )


def _check_input(P: RationalPoly):
    if P.is_zero():
        raise ValueError("zero polynomial")
    _need_degree(P.degree)


def verify_theorem(P: RationalPoly, p, center=0) -> TheoremReport:
    """Check every bound against ``P'`` using the smallest disk about ``center``."""
    _check_input(P)
    p = Prime(p)
    center = Fraction(center)
    base_val = min(root_valuations(taylor_shift(P, center), p))
    return _report(P, p, center, base_val)


def verify_with_explicit_disk(P: RationalPoly, p, center, radius_val) -> TheoremReport:
    _check_input(P)
    p = Prime(p)
    center = Fraction(center)
    if radius_val is not INF:
        radius_val = Fraction(radius_val)
    if min(root_valuations(taylor_shift(P, center), p)) < radius_val:
        raise ValueError("disk does not enclose roots")
    return _report(P, p, center, radius_val)
