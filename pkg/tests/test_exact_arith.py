from fractions import Fraction as F
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from legendre_cf.exact_arith import (
    RatInterval,
    format_rat,
    interval_contains,
    interval_intersect,
    interval_union,
    mediant,
    parse_rat,
)

rats = st.builds(F, st.integers(-180, 180), st.integers(1, 60))


@pytest.mark.parametrize("a, b, expected", [
    (F(0), F(1), F(1, 2)),
    (F(1, 3), F(1, 2), F(2, 5)),
    (F(1, 3), F(2, 5), F(3, 8)),
])
def test_mediant_examples(a, b, expected):
    assert mediant(a, b) == expected


def test_mediant_reduces():
    # 1/3 and 3/5 give 4/8
    m = mediant(F(1, 3), F(3, 5))
    assert (m.numerator, m.denominator) == (1, 2)


@given(rats, rats)
def test_mediant_strictly_between(a, b):
    m = mediant(a, b)
    if a != b:
        assert min(a, b) < m < max(a, b)
    assert gcd(abs(m.numerator), m.denominator) == 1 and m.denominator > 0


@pytest.mark.parametrize("text, value", [
    ("-4/11", F(-4, 11)), ("5", F(5)), (" 6/4 ", F(3, 2)), ("+2/3", F(2, 3)), ("0/7", F(0)),
])
def test_parse_rat(text, value):
    assert parse_rat(text) == value


@pytest.mark.parametrize("text", ["0.5", "1/0", "a/b", "1//2", "", "1/-2", "1e3"])
def test_parse_rat_rejects(text):
    with pytest.raises(ValueError):
        parse_rat(text)


@given(rats)
def test_format_parse_roundtrip(x):
    assert parse_rat(format_rat(x)) == x
    assert "/" in format_rat(x)


def test_format_integer():
    assert format_rat(F(5)) == "5/1"


def test_contains_examples():
    assert interval_contains(RatInterval(F(1, 4), F(2, 5)), F(4, 11))
    cyl = RatInterval(F(1, 3), F(2, 5), lo_closed=True)
    assert not interval_contains(cyl, F(2, 5))
    assert interval_contains(cyl, F(1, 3))
    assert F(4, 11) in cyl


def test_interval_invariants():
    with pytest.raises(ValueError):
        RatInterval(F(1, 2), F(1, 3))
    with pytest.raises(ValueError):
        RatInterval(F(1, 2), F(1, 2), True, False)
    assert str(RatInterval.point(F(1, 2))) == "[1/2, 1/2]"


def test_interval_text_roundtrip():
    iv = RatInterval(F(1, 3), F(2, 5), lo_closed=True)
    assert str(iv) == "[1/3, 2/5)"
    assert RatInterval.parse(str(iv)) == iv


def test_intersect_examples():
    assert interval_intersect(RatInterval(F(0), F(1, 2), True, False), RatInterval(F(1, 2), F(1), True, True)) is None
    got = interval_intersect(RatInterval(F(1, 4), F(2, 5)), RatInterval(F(1, 3), F(1, 2), True, False))
    assert got == RatInterval(F(1, 3), F(2, 5), True, False)
    iv = RatInterval(F(1, 3), F(2, 5), True, False)
    assert interval_intersect(iv, iv) == iv


@st.composite
def intervals(draw):
    a, b = sorted((draw(rats), draw(rats)))
    if a == b:
        return RatInterval.point(a)
    return RatInterval(a, b, draw(st.booleans()), draw(st.booleans()))


def _probes(*ivs):
    pts = set()
    for iv in ivs:
        pts |= {iv.lo, iv.hi, iv.lo - 1, iv.hi + 1, mediant(iv.lo, iv.hi), (iv.lo + iv.hi) / 2}
    return pts


@given(intervals(), intervals())
def test_intersection_is_pointwise_and(i, j):
    got = interval_intersect(i, j)
    for x in _probes(i, j):
        expect = interval_contains(i, x) and interval_contains(j, x)
        assert (got is not None and interval_contains(got, x)) == expect


@given(intervals(), intervals())
def test_union_is_pointwise_or_when_connected(i, j):
    got = interval_union(i, j)
    pts = _probes(i, j)
    if got is None:
        # a gap exists: some point between them lies in neither
        lo, hi = (i, j) if i.hi <= j.hi else (j, i)
        gap = [x for x in pts | {(lo.hi + hi.lo) / 2} if lo.hi <= x <= hi.lo]
        assert any(not interval_contains(i, x) and not interval_contains(j, x) for x in gap)
    else:
        for x in pts:
            assert interval_contains(got, x) == (interval_contains(i, x) or interval_contains(j, x))


def test_union_of_touching_half_open():
    left = RatInterval(F(1, 4), F(1, 3), False, True)
    right = RatInterval(F(1, 3), F(2, 5), True, False)
    assert interval_union(left, right) == RatInterval(F(1, 4), F(2, 5))
    assert interval_union(RatInterval(F(0), F(1, 3)), RatInterval(F(1, 3), F(1))) is None


@given(rats, rats)
def test_order_matches_cross_multiplication(a, b):
    assert (a < b) == (a.numerator * b.denominator < b.numerator * a.denominator)
    assert (a < b) == (a - b < 0)
