"""Farey series and the neighbours of a fraction inside its own series."""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from typing import Tuple

from .cf_engine import CF, evaluate_cf, expand_canonical
from .exact_arith import Rat


@dataclass(frozen=True)
class FareySeries:
    order: int
    entries: Tuple[Rat, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def index(self, x: Rat) -> int:
        i = bisect.bisect_left(self.entries, x)
        if i == len(self.entries) or self.entries[i] != x:
            raise ValueError(f"{x} is not in the Farey series of order {self.order}")
        return i

    def neighbors_of(self, x: Rat) -> "FareyNeighbors":
        """Positional neighbours; x must be an interior entry."""
        i = self.index(x)
        if i == 0 or i == len(self.entries) - 1:
            raise ValueError(f"{x} is an endpoint of the series and has one neighbour")
        return FareyNeighbors(self.entries[i - 1], self.entries[i + 1])


@dataclass(frozen=True)
class FareyNeighbors:
    lower: Rat
    upper: Rat


def farey_series(q: int) -> FareySeries:
    if q < 1:
        raise ValueError(f"Farey order must be >= 1, got {q}")
    a, b, c, d = 0, 1, 1, q
    entries = [Rat(0, 1)]
    while c <= q:
        k = (q + b) // d
        a, b, c, d = c, d, k * c - a, k * d - b
        entries.append(Rat(a, b))
    return FareySeries(q, tuple(entries))


def totient(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _require_unit_open(pq: Rat) -> Rat:
    pq = Rat(pq)
    if not 0 < pq < 1:
        raise ValueError(f"fraction must lie in (0, 1), got {pq}")
    return pq


def farey_neighbors(pq: Rat) -> FareyNeighbors:
    """Neighbours of p/q in the series of order q, from the two truncations
    ``[a0; ..., a_{t-1}]`` and ``[a0; ..., a_t - 1]`` of its canonical expansion."""
    pq = _require_unit_open(pq)
    cf = expand_canonical(pq)
    dropped = evaluate_cf(CF(cf.a0, cf.tail[:-1]))
    decremented = evaluate_cf(CF(cf.a0, cf.tail[:-1] + (cf.tail[-1] - 1,)))
    lower, upper = sorted((dropped, decremented))
    return FareyNeighbors(lower, upper)
