from fractions import Fraction as F
from itertools import product
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import naive_convergents, naive_expansion, naive_value, reduced_in_unit
from legendre_cf.cf_engine import (
    CF,
    COMPANION,
    CANONICAL,
    both_expansions,
    companion_of,
    convergents_of,
    cylinder_interval,
    evaluate_cf,
    expand_canonical,
    starts_cylinder,
)
from legendre_cf.exact_arith import RatInterval, interval_contains

rats = st.builds(F, st.integers(-500, 500), st.integers(1, 300))
cfs = st.builds(CF, st.integers(-5, 5), st.lists(st.integers(1, 9), max_size=7).map(tuple))


@pytest.mark.parametrize("x, a0, tail", [
    (F(7, 5), 1, (2, 2)),
    (F(1, 3), 0, (3,)),
    (F(-4, 11), -1, (1, 1, 1, 3)),
    (F(5), 5, ()),
])
def test_expand_canonical_examples(x, a0, tail):
    assert expand_canonical(x) == CF(a0, tail)
    # floor/reciprocal oracle agrees
    assert [a0, *tail] == naive_expansion(x)


@pytest.mark.parametrize("cf, other", [
    ("[1;2,2]", "[1;2,1,1]"),
    ("[0;3]", "[0;2,1]"),
    ("[5]", "[4;1]"),
])
def test_companion_examples(cf, other):
    assert companion_of(CF.parse(cf)) == CF.parse(other)
    assert companion_of(CF.parse(other)) == CF.parse(cf)


@pytest.mark.parametrize("cf, expected", [
    ("[0;2,1,3]", [F(0), F(1, 2), F(1, 3), F(4, 11)]),
    ("[5]", [F(5)]),
    ("[1;2,2]", [F(1), F(3, 2), F(7, 5)]),
])
def test_convergents_examples(cf, expected):
    conv = convergents_of(CF.parse(cf))
    assert [c.value for c in conv] == expected
    assert [c.index for c in conv] == list(range(len(expected)))


@pytest.mark.parametrize("cf, value", [("[0;2,1,3]", F(4, 11)), ("[5]", F(5)), ("[0;2,1]", F(1, 3))])
def test_evaluate_examples(cf, value):
    assert evaluate_cf(CF.parse(cf)) == value


@pytest.mark.parametrize("quotients, text", [
    ((2,), "(1/3, 1/2]"),
    ((1,), "(1/2, 1/1]"),
    ((2, 1), "[1/3, 2/5)"),
])
def test_cylinder_examples(quotients, text):
    assert str(cylinder_interval(quotients)) == text


def test_cylinder_rejects():
    with pytest.raises(ValueError):
        cylinder_interval(())
    with pytest.raises(ValueError):
        cylinder_interval((2, 0))


def test_cf_rejects_nonpositive_tail():
    with pytest.raises(ValueError):
        CF(0, (2, 0))


def test_cf_text():
    assert str(CF(0, (2, 1, 3))) == "[0;2,1,3]"
    assert CF.parse("[0; 2, 1, 3]") == CF(0, (2, 1, 3))
    assert CF.parse("[5;]") == CF(5) == CF.parse("[5]")
    for bad in ("0;2", "[x]", "[1;2;3]"):
        with pytest.raises(ValueError):
            CF.parse(bad)


def test_form_tag():
    assert CF(1, (2, 2)).form == CANONICAL
    assert CF(1, (2, 1, 1)).form == COMPANION
    assert CF(5).form == CANONICAL


@given(rats)
def test_roundtrip_both_forms(x):
    canon, comp = both_expansions(x)
    assert evaluate_cf(canon) == x == evaluate_cf(comp)
    assert canon.form == CANONICAL and comp.form == COMPANION
    assert companion_of(comp) == canon
    # one length even, one odd
    assert (canon.last_index + comp.last_index) % 2 == 1


@given(cfs)
def test_evaluate_matches_naive(cf):
    assert evaluate_cf(cf) == naive_value(list(cf.quotients))


@given(cfs)
def test_involution_and_canonical_roundtrip(cf):
    assert companion_of(companion_of(cf)) == cf
    assert evaluate_cf(companion_of(cf)) == evaluate_cf(cf)
    if cf.form == CANONICAL:
        assert expand_canonical(evaluate_cf(cf)) == cf


@given(cfs)
def test_convergents_recurrence_properties(cf):
    conv = convergents_of(cf)
    assert [c.value for c in conv] == naive_convergents(list(cf.quotients))
    for c in conv:
        assert c.q > 0 and gcd(abs(c.p), c.q) == 1
    for prev, cur in zip(conv, conv[1:]):
        assert cur.p * prev.q - prev.p * cur.q == (-1) ** (cur.index - 1)
    assert conv[-1].value == evaluate_cf(cf)


@given(rats)
def test_companion_adds_exactly_one_convergent(x):
    canon, comp = both_expansions(x)
    a = [c.value for c in convergents_of(canon)]
    b = [c.value for c in convergents_of(comp)]
    assert len(b) == len(a) + 1
    assert b[:-2] == a[:-1] and b[-1] == a[-1]
    assert set(b) - set(a) == {b[-2]}


@given(st.lists(st.integers(1, 6), min_size=1, max_size=5), st.integers(1, 6))
def test_cylinder_nesting(prefix, extra):
    outer = cylinder_interval(prefix)
    inner = cylinder_interval(prefix + [extra])
    for x in (inner.lo, inner.hi):
        assert outer.lo <= x <= outer.hi
    # [0; a1..an, 1] closes the inner cylinder but is the excluded mediant
    # endpoint of the outer one; every other point nests
    exception = naive_value([0, *prefix, 1]) if extra == 1 else None
    for x, closed in ((inner.lo, inner.lo_closed), (inner.hi, inner.hi_closed)):
        if closed:
            assert interval_contains(outer, x) == (x != exception)


def _prefixes():
    out = []
    for n, top in ((1, 12), (2, 7), (3, 5), (4, 3)):
        out.extend(product(range(1, top + 1), repeat=n))
    return out


def test_cylinder_membership_bruteforce():
    """interval_contains(cylinder) agrees with reading the expansions, den <= 64."""
    pts = reduced_in_unit(64, closed=True)
    expansions = {x: naive_expansion(x) for x in pts}
    checked = 0
    for prefix in _prefixes():
        iv = cylinder_interval(prefix)
        n = len(prefix)
        for x in pts:
            canon = expansions[x]
            comp = canon[:-1] + [canon[-1] - 1, 1]
            exact = [0, *prefix] in (canon, comp)
            longer = canon[0] == 0 and len(canon) - 1 > n and tuple(canon[1:n + 1]) == prefix
            assert interval_contains(iv, x) == (exact or longer), (prefix, x)
            checked += 1
    assert checked > 300_000


def test_cylinder_mediant_endpoint_needs_canonical_tail():
    # 1/3 = [0;2,1] starts with (2) only through its companion expansion
    # ending in 1, which is exactly the excluded mediant endpoint of (2).
    iv = cylinder_interval((2,))
    assert not interval_contains(iv, F(1, 3))
    assert not starts_cylinder(F(1, 3), (2,))
    assert starts_cylinder(F(1, 2), (2,)) and starts_cylinder(F(2, 5), (2,))


def test_starts_cylinder_agrees_with_interval_small():
    for prefix in _prefixes()[:60]:
        iv = cylinder_interval(prefix)
        for x in reduced_in_unit(20, closed=True):
            assert starts_cylinder(x, prefix) == interval_contains(iv, x)


def test_cylinder_is_half_open_by_parity():
    assert cylinder_interval((3, 2)) == RatInterval(F(2, 7), F(3, 10), True, False)
    assert cylinder_interval((3, 2, 1)).hi_closed
