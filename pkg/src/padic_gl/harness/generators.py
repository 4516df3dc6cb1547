"""Deterministic random instances for verification campaigns."""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from ..polynomial import RationalPoly, from_roots, parse_poly
from ..valuation import Prime


class Mode(str, enum.Enum):
    FROM_ROOTS = "roots"
    RANDOM_COEFFS = "coeffs"
    MIXED = "mixed"


@dataclass(frozen=True)
class GeneratorConfig:
    seed: int = 0
    primes: tuple[int, ...] = (2, 3, 5, 7, 11, 13)
    degree_min: int = 2
    degree_max: int = 12
    coeff_height: int = 10
    mode: Mode = Mode.MIXED
    trials: int = 1000

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if not self.primes:
            raise ValueError("at least one prime is required")
        object.__setattr__(self, "primes", tuple(Prime(p) for p in self.primes))
        object.__setattr__(self, "mode", Mode(self.mode))
        if not 2 <= self.degree_min <= self.degree_max:
            raise ValueError("need 2 <= degree_min <= degree_max")
        if self.coeff_height < 1:
            raise ValueError("coeff_height must be positive")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "primes": [int(p) for p in self.primes],
            "degree_min": self.degree_min,
            "degree_max": self.degree_max,
            "coeff_height": self.coeff_height,
            "mode": self.mode.value,
            "trials": self.trials,
        }


class Instance(NamedTuple):
    poly: RationalPoly
    prime: int
    center: Fraction
    # explicit roots when known (FROM_ROOTS draws and some corpus entries)
    roots: Optional[tuple[Fraction, ...]] = None


def _rng(seed: int, index: int) -> random.Random:
    # str seeds are hashed with sha512, stable across processes and runs
    return random.Random(f"padic-gl:{seed}:{index}")


def _rational(rng: random.Random, height: int, p: int) -> Fraction:
    x = Fraction(rng.randint(-height, height), rng.randint(1, height))
    # bias toward nontrivial p-adic structure
    if rng.random() < 0.4:
        x *= Fraction(p) ** rng.randint(-2, 2)
    return x


def _nonzero_rational(rng, height, p) -> Fraction:
    while True:
        x = _rational(rng, height, p)
        if x:
            return x


def generate_instance(config: GeneratorConfig, index: int) -> Instance:
    """Instance number ``index``; a pure function of ``(config, index)``."""
    if not 0 <= index < config.trials:
        raise ValueError(f"index {index} outside [0, {config.trials})")
    rng = _rng(config.seed, index)
    p = rng.choice(config.primes)
    n = rng.randint(config.degree_min, config.degree_max)
    mode = config.mode
    if mode is Mode.MIXED:
        mode = Mode.FROM_ROOTS if rng.random() < 0.5 else Mode.RANDOM_COEFFS
    h = config.coeff_height

    if mode is Mode.FROM_ROOTS:
        pool = [_rational(rng, h, p) for _ in range(rng.randint(1, n))]
        roots = tuple(rng.choice(pool) for _ in range(n))
        poly = from_roots(roots, _nonzero_rational(rng, h, p))
    else:
        roots = None
        cs = [Fraction(0) if rng.random() < 0.2 else _rational(rng, h, p) for _ in range(n)]
        cs.append(_nonzero_rational(rng, h, p))
        poly = RationalPoly(cs)

    u = rng.random()
    if u < 1 / 3:
        center = Fraction(0)
    elif u < 2 / 3 and roots:
        center = rng.choice(roots)
    else:
        center = _rational(rng, h, p)
    return Instance(poly, int(p), center, roots)


# (coefficients lowest first, prime, center, explicit roots or None)
CORPUS = (
    ("0,0,-1,1", 3, "0", ("0", "0", "1")),
    ("16,-32,24,-8,1", 2, "2", ("2", "2", "2", "2")),
    ("-1,3,-3,1", 3, "0", ("1", "1", "1")),
    ("0,-1,0,1", 3, "0", ("0", "1", "-1")),
    ("0,-1,0,1", 5, "0", ("0", "1", "-1")),
    ("-1,0,1", 2, "0", ("1", "-1")),
    ("-1,0,1", 3, "0", ("1", "-1")),
    ("-2,0,0,0,1", 2, "0", None),
    ("0,-1,0,0,0,0,0,0,0,1", 3, "0", None),
    ("5,1,0,0,0,1", 5, "1", None),
)


def corpus_instances() -> list[Instance]:
    out = []
    for text, p, center, roots in CORPUS:
        rs = None if roots is None else tuple(Fraction(r) for r in roots)
        out.append(Instance(parse_poly(text), p, Fraction(center), rs))
    return out
