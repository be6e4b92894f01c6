import math
import random

import pytest

from helpers import BASE_NAMES, check_axioms, sample_element
from tropos import (
    BOOLEAN,
    MAXMIN,
    MAXPLUS,
    MINPLUS,
    NEG_INF,
    NONNEG,
    POS_INF,
    UNITMAXMIN,
    semiring,
)
from tropos.errors import (
    CapabilityError,
    NoInverseError,
    ParseError,
    SemiringMismatchError,
)

ALL_NAMES = BASE_NAMES + ("interval:maxplus", "interval:minplus")


def test_instance_constants():
    assert MAXPLUS.zero is NEG_INF and MAXPLUS.one == 0
    assert MINPLUS.zero is POS_INF and MINPLUS.one == 0
    assert MAXMIN.zero is NEG_INF and MAXMIN.one is POS_INF
    assert BOOLEAN.zero is False and BOOLEAN.one is True
    assert UNITMAXMIN.zero == 0.0 and UNITMAXMIN.one == 1.0
    assert NONNEG.zero == 0.0 and NONNEG.one == 1.0
    assert not NONNEG.is_idempotent
    assert NONNEG.is_semifield and BOOLEAN.is_semifield
    assert not MAXMIN.is_semifield and not UNITMAXMIN.is_semifield


def test_registry_round_trip():
    for name in ALL_NAMES:
        assert semiring(name).name == name
    with pytest.raises(ParseError):
        semiring("tropical")


def test_add_examples():
    assert MAXPLUS.add(3, 5) == 5
    assert MAXPLUS.add(7.5, NEG_INF) == 7.5
    assert MAXPLUS.add(NEG_INF, 7.5) == 7.5
    assert UNITMAXMIN.add(0.2, 0.8) == 0.8


def test_mul_examples():
    assert MAXPLUS.mul(3, 5) == 8
    assert MAXPLUS.mul(4.25, 0) == 4.25
    assert MAXPLUS.mul(7, NEG_INF) is NEG_INF
    assert MAXPLUS.mul(NEG_INF, 7) is NEG_INF


def test_absorption_never_produces_nan():
    # -inf combined with +inf must absorb by rule, not float-add to NaN
    assert MAXMIN.mul(NEG_INF, POS_INF) is NEG_INF
    assert MAXMIN.mul(POS_INF, NEG_INF) is NEG_INF
    assert MINPLUS.mul(POS_INF, -123.0) is POS_INF


def test_carrier_membership_enforced():
    with pytest.raises(SemiringMismatchError):
        MAXPLUS.add(1.0, POS_INF)
    with pytest.raises(SemiringMismatchError):
        MINPLUS.mul(NEG_INF, 1.0)
    with pytest.raises(SemiringMismatchError):
        BOOLEAN.add(True, 1)
    with pytest.raises(SemiringMismatchError):
        UNITMAXMIN.add(0.5, 1.5)
    with pytest.raises(SemiringMismatchError):
        NONNEG.mul(2.0, -1.0)
    with pytest.raises(SemiringMismatchError):
        MAXPLUS.add(1.0, math.nan)


def test_leq_examples():
    assert MAXPLUS.leq(2, 5)
    assert not MAXPLUS.leq(5, 2)
    # the standard order over min-plus is opposite to the numeric one
    assert MINPLUS.leq(5, 2)
    assert not MINPLUS.leq(2, 5)
    with pytest.raises(CapabilityError):
        NONNEG.leq(1.0, 2.0)


def test_zero_is_least():
    rng = random.Random(7)
    for name in ALL_NAMES:
        sr = semiring(name)
        if not sr.is_idempotent:
            continue
        for _ in range(50):
            assert sr.leq(sr.zero, sample_element(sr, rng))


def test_inv_examples():
    assert MAXPLUS.inv(5) == -5
    assert MAXPLUS.inv(0) == 0
    with pytest.raises(NoInverseError):
        MAXPLUS.inv(NEG_INF)
    with pytest.raises(CapabilityError):
        MAXMIN.inv(3.0)
    assert BOOLEAN.inv(True) is True
    assert NONNEG.inv(4.0) == 0.25


def test_nth_root_examples():
    assert MAXPLUS.nth_root(6, 3) == 2
    assert MAXPLUS.nth_root(-4.5, 1) == -4.5
    assert abs(NONNEG.nth_root(8.0, 3) - 2.0) < 1e-9
    assert MAXMIN.nth_root(3.5, 4) == 3.5
    with pytest.raises(CapabilityError):
        semiring("interval:maxplus").nth_root(semiring("interval:maxplus").one, 2)
    with pytest.raises(ValueError):
        MAXPLUS.nth_root(1.0, 0)


def test_root_power_round_trip():
    rng = random.Random(11)
    for name in BASE_NAMES:
        sr = semiring(name)
        if not sr.is_radicable:
            continue
        for _ in range(200):
            a = sample_element(sr, rng)
            n = rng.randrange(1, 6)
            r = sr.nth_root(a, n)
            acc = r
            for _ in range(n - 1):
                acc = sr.mul(acc, r)
            if a is NEG_INF or a is POS_INF or isinstance(a, bool):
                assert acc == a or acc is a
            else:
                assert abs(acc - a) <= 1e-9 * max(1.0, abs(a))


@pytest.mark.parametrize("name", ALL_NAMES)
def test_axiom_suite(name):
    sr = semiring(name)
    check_axioms(sr, random.Random(hash(name) & 0xFFFF), 500)


@pytest.mark.parametrize("name", ALL_NAMES)
def test_partial_order_and_monotonicity(name):
    sr = semiring(name)
    if not sr.is_idempotent:
        return
    rng = random.Random(len(name))
    for _ in range(300):
        a = sample_element(sr, rng)
        b = sample_element(sr, rng)
        c = sample_element(sr, rng)
        assert sr.leq(a, a)
        if sr.leq(a, b) and sr.leq(b, a):
            assert a == b
        if sr.leq(a, b) and sr.leq(b, c):
            assert sr.leq(a, c)
        if sr.leq(a, b):
            assert sr.leq(sr.add(a, c), sr.add(b, c))
            assert sr.leq(sr.mul(a, c), sr.mul(b, c))


def _dual(x):
    if x is NEG_INF:
        return POS_INF
    if x is POS_INF:
        return NEG_INF
    return -x


def test_maxplus_minplus_isomorphic_by_negation():
    rng = random.Random(23)
    for _ in range(500):
        a = sample_element(MINPLUS, rng)
        b = sample_element(MINPLUS, rng)
        assert _dual(MAXPLUS.add(_dual(a), _dual(b))) == MINPLUS.add(a, b)
        assert _dual(MAXPLUS.mul(_dual(a), _dual(b))) == MINPLUS.mul(a, b)
        if a is not POS_INF:
            assert _dual(MAXPLUS.inv(_dual(a))) == MINPLUS.inv(a)


def test_idempotency_only_where_flagged():
    rng = random.Random(3)
    for name in ALL_NAMES:
        sr = semiring(name)
        for _ in range(100):
            x = sample_element(sr, rng)
            if sr.is_idempotent:
                assert sr.add(x, x) == x
    # the one non-idempotent instance really is not idempotent
    assert NONNEG.add(2.0, 2.0) == 4.0
