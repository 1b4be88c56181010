import math

import pytest
from hypothesis import given

from neutrosophic.errors import DomainError, ParseError
from neutrosophic.interval import (
    UnitInterval,
    iv_add,
    iv_div,
    iv_max,
    iv_min,
    iv_one_minus,
    iv_scale,
    iv_sub,
)

from support import intervals, iv


def close(a: UnitInterval, lo, hi, tol=1e-9):
    return abs(a.inf - lo) <= tol and abs(a.sup - hi) <= tol


@pytest.mark.parametrize("lo,hi", [(0.5, 0.4), (-0.1, 0.2), (0.2, 1.01), (math.nan, 0.5), (0.0, math.inf)])
def test_constructor_rejects_invalid(lo, hi):
    with pytest.raises(DomainError):
        UnitInterval(lo, hi)


def test_parse_forms():
    assert UnitInterval.parse("[0.2, 0.4]") == iv(0.2, 0.4)
    assert UnitInterval.parse("0.3") == iv(0.3)
    with pytest.raises(ParseError):
        UnitInterval.parse("[0.2;0.4]")
    with pytest.raises(DomainError):
        UnitInterval.parse("[0.6,0.4]")


def test_add_examples():
    assert close(iv_add(iv(0.2, 0.4), iv(0.5, 0.7)), 0.7, 1.0)
    assert iv_add(iv(0, 0), iv(0.3, 0.6)) == iv(0.3, 0.6)
    assert iv_add(iv(0.6, 0.9), iv(0.7, 0.8)) == iv(1.0, 1.0)


def test_sub_examples():
    assert close(iv_sub(iv(0.7), iv(0.4)), 0.3, 0.3)
    assert iv_sub(iv(0.2, 0.3), iv(0.5, 0.9)) == iv(0, 0)
    assert close(iv_sub(iv(0.3, 0.6), iv(0.1, 0.2)), 0.1, 0.5)


def test_one_minus_examples():
    assert close(iv_one_minus(iv(0.3, 0.5)), 0.5, 0.7)
    assert iv_one_minus(iv(0, 1)) == iv(0, 1)
    assert close(iv_one_minus(iv_one_minus(iv(0.2, 0.9))), 0.2, 0.9)


def test_min_max_examples():
    assert iv_min(iv(0.2, 0.4), iv(0.5, 0.7)) == iv(0.2, 0.4)
    assert iv_max(iv(0.1, 0.6), iv(0.1, 0.6)) == iv(0.1, 0.6)
    # endpoint-wise: the result need not be one of the operands
    assert iv_min(iv(0.2, 0.7), iv(0.4, 0.5)) == iv(0.2, 0.5)


def test_scale_and_divide():
    assert iv_scale(iv(0.3, 0.5), 2) == iv(0.6, 1.0)
    assert iv_scale(iv(0.4, 0.8), 1) == iv(0.4, 0.8)
    assert iv_div(iv(0.4, 0.8), 2) == iv(0.2, 0.4)
    for k in (0, -1):
        with pytest.raises(DomainError):
            iv_scale(iv(0.4), k)
        with pytest.raises(DomainError):
            iv_div(iv(0.4), k)


@given(intervals(), intervals(), intervals())
def test_lattice_laws(a, b, c):
    assert iv_min(a, a) == a and iv_max(a, a) == a
    assert iv_min(a, b) == iv_min(b, a) and iv_max(a, b) == iv_max(b, a)
    assert iv_min(a, iv_min(b, c)) == iv_min(iv_min(a, b), c)
    assert iv_max(a, iv_max(b, c)) == iv_max(iv_max(a, b), c)
    assert iv_min(a, iv_max(b, c)) == iv_max(iv_min(a, b), iv_min(a, c))
    assert iv_max(a, iv_min(b, c)) == iv_min(iv_max(a, b), iv_max(a, c))


@given(intervals(), intervals())
def test_one_minus_is_order_reversing_involution(a, b):
    assert iv_one_minus(iv_one_minus(a)) == a
    if a.le(b):
        assert iv_one_minus(b).le(iv_one_minus(a))


@given(intervals(), intervals(), intervals())
def test_add_sub_monotone(a, b, c):
    if a.le(b):
        assert iv_add(a, c).le(iv_add(b, c))
        assert iv_add(c, a).le(iv_add(c, b))
        assert iv_sub(a, c).le(iv_sub(b, c))
        # subtraction is antitone in its second argument
        assert iv_sub(c, b).le(iv_sub(c, a))
