"""Exact rationals and intervals with independently open or closed endpoints.

Rationals are plain :class:`fractions.Fraction` values.  They are always
reduced with a positive denominator, which is all the rest of the package
relies on.  The only additions here are a strict ``p/q`` text form and an
interval type that keeps track of endpoint openness.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

Rat = Fraction

_RAT_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rat(text: str) -> Rat:
    """Parse ``"p/q"`` or an integer literal.  Decimals are rejected."""
    m = _RAT_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational of the form p/q: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Rat(num, den)


def format_rat(x: Rat) -> str:
    """Always ``num/den``, so integers print as ``5/1``."""
    return f"{x.numerator}/{x.denominator}"


def as_rat(x: Union[Rat, int, str]) -> Rat:
    if isinstance(x, str):
        return parse_rat(x)
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass a Fraction or 'p/q'")
    return Rat(x)


def mediant(a: Rat, b: Rat) -> Rat:
    """(a.num + b.num) / (a.den + b.den), reduced."""
    return Rat(a.numerator + b.numerator, a.denominator + b.denominator)


@dataclass(frozen=True)
class RatInterval:
    lo: Rat
    hi: Rat
    lo_closed: bool = False
    hi_closed: bool = False

    def __post_init__(self):
        object.__setattr__(self, "lo", as_rat(self.lo))
        object.__setattr__(self, "hi", as_rat(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"interval endpoints out of order: {self.lo} > {self.hi}")
        if self.lo == self.hi and not (self.lo_closed and self.hi_closed):
            raise ValueError("a degenerate interval must be closed on both ends")

    @classmethod
    def point(cls, x: Rat) -> "RatInterval":
        return cls(x, x, True, True)

    @classmethod
    def parse(cls, text: str) -> "RatInterval":
        s = text.strip()
        if len(s) < 2 or s[0] not in "[(" or s[-1] not in "])":
            raise ValueError(f"not an interval: {text!r}")
        parts = s[1:-1].split(",")
        if len(parts) != 2:
            raise ValueError(f"not an interval: {text!r}")
        return cls(parse_rat(parts[0]), parse_rat(parts[1]), s[0] == "[", s[-1] == "]")

    def __contains__(self, x: Rat) -> bool:
        return interval_contains(self, x)

    def __str__(self) -> str:
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        return f"{left}{format_rat(self.lo)}, {format_rat(self.hi)}{right}"


def interval_contains(interval: RatInterval, x: Rat) -> bool:
    if x < interval.lo or x > interval.hi:
        return False
    if x == interval.lo and not interval.lo_closed:
        return False
    if x == interval.hi and not interval.hi_closed:
        return False
    return True


def _lower_bound(i: RatInterval, j: RatInterval):
    # the tighter lower endpoint; on ties an open end wins
    if i.lo != j.lo:
        return (i.lo, i.lo_closed) if i.lo > j.lo else (j.lo, j.lo_closed)
    return i.lo, i.lo_closed and j.lo_closed


def _upper_bound(i: RatInterval, j: RatInterval):
    if i.hi != j.hi:
        return (i.hi, i.hi_closed) if i.hi < j.hi else (j.hi, j.hi_closed)
    return i.hi, i.hi_closed and j.hi_closed


def interval_intersect(i: RatInterval, j: RatInterval) -> Optional[RatInterval]:
    """Exact set intersection, or ``None`` when the intervals are disjoint."""
    lo, lo_closed = _lower_bound(i, j)
    hi, hi_closed = _upper_bound(i, j)
    if lo > hi:
        return None
    if lo == hi and not (lo_closed and hi_closed):
        return None
    return RatInterval(lo, hi, lo_closed, hi_closed)


def interval_union(i: RatInterval, j: RatInterval) -> Optional[RatInterval]:
    """Set union when it is a single interval, otherwise ``None``."""
    first, second = (i, j) if (i.lo, not i.lo_closed) <= (j.lo, not j.lo_closed) else (j, i)
    # second must start inside first or exactly where first ends, with no gap
    if second.lo > first.hi:
        return None
    if second.lo == first.hi and not (second.lo_closed or first.hi_closed):
        return None
    lo, lo_closed = first.lo, first.lo_closed
    if first.lo == second.lo:
        lo_closed = first.lo_closed or second.lo_closed
    if first.hi != second.hi:
        hi, hi_closed = (first.hi, first.hi_closed) if first.hi > second.hi else (second.hi, second.hi_closed)
    else:
        hi, hi_closed = first.hi, first.hi_closed or second.hi_closed
    return RatInterval(lo, hi, lo_closed, hi_closed)
