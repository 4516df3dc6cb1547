"""Exact p-adic root and critical-point norms for rational polynomials.

Norms are carried on the valuation scale, ``|x| = p**(-v)``, as exact
rationals with :data:`INF` standing for the valuation of zero.
"""

from .valuation import INF, Prime, val_add_lower_bound, val_mul, valuation_of_rational
from .polynomial import (
    RationalPoly,
    derivative,
    elementary_symmetric,
    evaluate,
    format_poly,
    from_roots,
    parse_poly,
    taylor_shift,
)
from .newton_polygon import (
    NewtonPolygon,
    build_polygon,
    count_roots_in_disk,
    min_enclosing_valuation,
    root_valuations,
)
from .gauss_lucas import (
    CriticalRadii,
    KReport,
    TheoremReport,
    corollary_bounds,
    critical_radii,
    verify_theorem,
    verify_with_explicit_disk,
)

__all__ = [
    "INF",
    "Prime",
    "val_add_lower_bound",
    "val_mul",
    "valuation_of_rational",
    "RationalPoly",
    "derivative",
    "elementary_symmetric",
    "evaluate",
    "format_poly",
    "from_roots",
    "parse_poly",
    "taylor_shift",
    "NewtonPolygon",
    "build_polygon",
    "count_roots_in_disk",
    "min_enclosing_valuation",
    "root_valuations",
    "CriticalRadii",
    "KReport",
    "TheoremReport",
    "corollary_bounds",
    "critical_radii",
    "verify_theorem",
    "verify_with_explicit_disk",
]
