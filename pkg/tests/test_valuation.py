import pickle
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from padic_gl import INF, Prime, val_add_lower_bound, val_mul, valuation_of_rational
from padic_gl.valuation import norm_string, parse_valuation

from oracles import vp

PRIMES_TO_100 = [p for p in range(2, 101) if all(p % d for d in range(2, p))]
nonzero = st.fractions(max_denominator=10**6).filter(bool)


def test_examples():
    assert valuation_of_rational(0, 3) is INF
    assert valuation_of_rational(Fraction(2, 3), 3) == -1
    assert valuation_of_rational(12, 2) == 2


def test_val_mul_examples():
    assert val_mul(1, 2) == 3
    assert val_mul(INF, 5) is INF
    v3 = lambda x: valuation_of_rational(x, 3)
    assert val_mul(v3(Fraction(2, 3)), v3(Fraction(3, 2))) == 0 == v3(1)


def test_val_add_lower_bound_examples():
    assert val_add_lower_bound(0, 1) == 0
    assert valuation_of_rational(1 + 3, 3) == 0
    assert val_add_lower_bound(1, 1) == 1
    assert valuation_of_rational(3 + 6, 3) == 2
    assert val_add_lower_bound(INF, 4) == 4
    assert val_add_lower_bound(4, INF) == 4


@pytest.mark.parametrize("p", PRIMES_TO_100)
def test_unit_and_uniformizer(p):
    assert valuation_of_rational(1, p) == 0
    assert valuation_of_rational(p, p) == 1


@pytest.mark.parametrize("bad", [0, 1, 4, 9, 91, -7, 2.5, True])
def test_prime_rejects(bad):
    with pytest.raises(ValueError):
        Prime(bad)


def test_prime_is_int():
    p = Prime(97)
    assert p == 97 and str(p) == "97" and pickle.loads(pickle.dumps(p)) == 97


def test_infinity_ordering_and_arithmetic():
    vals = [Fraction(3), INF, Fraction(-1, 2), 0, INF]
    assert sorted(vals) == [Fraction(-1, 2), 0, 3, INF, INF]
    assert min(INF, Fraction(7)) == 7
    assert INF + Fraction(5) is INF and Fraction(5) + INF is INF
    assert INF - Fraction(5) is INF
    assert INF >= INF and not INF > INF and INF != Fraction(10**9)
    assert pickle.loads(pickle.dumps(INF)) is INF
    with pytest.raises(ArithmeticError):
        INF - INF


def test_parse_and_norm_string():
    assert parse_valuation("inf") is INF
    assert parse_valuation("-1/2") == Fraction(-1, 2)
    assert norm_string(Fraction(-1), 3) == "3^1"
    assert norm_string(INF, 3) == "0"


def test_randomized_ultrametric_10k():
    rng = random.Random(20260101)
    for _ in range(10_000):
        p = rng.choice(PRIMES_TO_100)
        x, y = (
            Fraction(rng.choice([-1, 1]) * rng.randint(1, 10**6) * p ** rng.randint(0, 3),
                     rng.randint(1, 10**4) * p ** rng.randint(0, 3))
            for _ in range(2)
        )
        vx, vy = valuation_of_rational(x, p), valuation_of_rational(y, p)
        assert vx == vp(x, p) and vy == vp(y, p)
        assert val_mul(vx, vy) == valuation_of_rational(x * y, p)
        vs = valuation_of_rational(x + y, p)
        assert vs >= val_add_lower_bound(vx, vy)
        if vx != vy:
            assert vs == val_add_lower_bound(vx, vy)


@given(nonzero, nonzero, st.sampled_from(PRIMES_TO_100))
def test_ultrametric_property(x, y, p):
    vx, vy = valuation_of_rational(x, p), valuation_of_rational(y, p)
    assert valuation_of_rational(x * y, p) == vx + vy
    assert valuation_of_rational(x + y, p) >= min(vx, vy)
    if vx != vy:
        assert valuation_of_rational(x + y, p) == min(vx, vy)


@given(st.fractions(max_denominator=1000), st.sampled_from([2, 3, 5, 7]))
def test_infinite_iff_zero(x, p):
    assert (valuation_of_rational(x, p) is INF) == (x == 0)
