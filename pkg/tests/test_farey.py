from fractions import Fraction as F

import pytest

from conftest import naive_farey
from legendre_cf.exact_arith import mediant
from legendre_cf.farey import farey_neighbors, farey_series, totient


@pytest.mark.parametrize("q, expected", [
    (3, [F(0), F(1, 3), F(1, 2), F(2, 3), F(1)]),
    (1, [F(0), F(1)]),
])
def test_series_examples(q, expected):
    assert list(farey_series(q)) == expected


def test_series_order_5_has_11_entries():
    assert len(farey_series(5)) == 11


def test_series_rejects_zero():
    with pytest.raises(ValueError):
        farey_series(0)


@pytest.mark.parametrize("q", range(1, 41))
def test_series_matches_enumeration(q):
    assert list(farey_series(q)) == naive_farey(q)


def test_totient_small():
    assert [totient(n) for n in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]


@pytest.mark.parametrize("pq, lower, upper", [
    (F(1, 3), F(0), F(1, 2)),
    (F(2, 5), F(1, 3), F(1, 2)),
    (F(1, 2), F(0), F(1)),
])
def test_neighbors_examples(pq, lower, upper):
    nb = farey_neighbors(pq)
    assert (nb.lower, nb.upper) == (lower, upper)


@pytest.mark.parametrize("pq", [F(0), F(1), F(3, 2), F(-1, 3)])
def test_neighbors_rejects_outside_unit_interval(pq):
    with pytest.raises(ValueError):
        farey_neighbors(pq)


def test_positional_neighbors_reject_endpoints():
    with pytest.raises(ValueError):
        farey_series(4).neighbors_of(F(0))
    with pytest.raises(ValueError):
        farey_series(4).neighbors_of(F(2, 7))


def test_neighbors_truncation_matches_positions_q_le_60():
    for q in range(2, 61):
        series = farey_series(q)
        for x in series.entries[1:-1]:
            if x.denominator != q:
                continue
            nb = farey_neighbors(x)
            assert nb == series.neighbors_of(x)
            assert nb.lower.denominator + nb.upper.denominator == q
            assert nb.lower.numerator + nb.upper.numerator == x.numerator
            assert mediant(nb.lower, nb.upper) == x
