"""Finite continued fractions of rationals.

Every rational has exactly two finite expansions: the canonical one, whose
last partial quotient is at least 2 (or which is just ``[a0]``), and the
companion one obtained by splitting the last quotient ``a`` into ``a-1, 1``.
Indices are 0-based with ``a0 = floor(x)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List, NamedTuple, Sequence, Tuple

from .exact_arith import Rat, RatInterval, mediant

CANONICAL = "canonical"
COMPANION = "companion"


@dataclass(frozen=True)
class CF:
    a0: int
    tail: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "tail", tuple(int(a) for a in self.tail))
        if any(a < 1 for a in self.tail):
            raise ValueError(f"partial quotients after a0 must be >= 1, got {self.tail}")

    @property
    def form(self) -> str:
        if self.tail and self.tail[-1] == 1:
            return COMPANION
        return CANONICAL

    @property
    def last_index(self) -> int:
        return len(self.tail)

    @property
    def quotients(self) -> Tuple[int, ...]:
        return (self.a0,) + self.tail

    @classmethod
    def parse(cls, text: str) -> "CF":
        """Accepts ``[a0; a1, a2, ...]``; the trailing ``;`` may be omitted for ``[a0]``."""
        m = re.match(r"^\s*\[\s*([+-]?\d+)\s*(?:;(.*))?\]\s*$", text)
        if m is None:
            raise ValueError(f"not a continued fraction: {text!r}")
        rest = (m.group(2) or "").strip()
        tail = [] if not rest else [int(t) for t in rest.split(",")]
        return cls(int(m.group(1)), tuple(tail))

    def __str__(self) -> str:
        if not self.tail:
            return f"[{self.a0}]"
        return f"[{self.a0};{','.join(map(str, self.tail))}]"


class Convergent(NamedTuple):
    index: int
    p: int
    q: int

    @property
    def value(self) -> Rat:
        return Rat(self.p, self.q)


def expand_canonical(x: Rat) -> CF:
    x = Rat(x)
    num, den = x.numerator, x.denominator
    a0, r = divmod(num, den)
    tail = []
    num, den = den, r
    while den:
        a, r = divmod(num, den)
        tail.append(a)
        num, den = den, r
    return CF(a0, tuple(tail))


def companion_of(cf: CF) -> CF:
    """The other expansion of the same value.  ``[a0]`` pairs with ``[a0-1; 1]``."""
    if not cf.tail:
        return CF(cf.a0 - 1, (1,))
    if cf.tail[-1] == 1:
        if len(cf.tail) == 1:
            return CF(cf.a0 + 1)
        return CF(cf.a0, cf.tail[:-2] + (cf.tail[-2] + 1,))
    return CF(cf.a0, cf.tail[:-1] + (cf.tail[-1] - 1, 1))


def both_expansions(x: Rat) -> Tuple[CF, CF]:
    """(canonical, companion)."""
    canon = expand_canonical(x)
    return canon, companion_of(canon)


def convergents_of(cf: CF) -> List[Convergent]:
    p2, q2, p1, q1 = 0, 1, 1, 0
    out = []
    for n, a in enumerate(cf.quotients):
        p, q = a * p1 + p2, a * q1 + q2
        out.append(Convergent(n, p, q))
        p2, q2, p1, q1 = p1, q1, p, q
    return out


def penultimate(cf: CF) -> Tuple[int, int]:
    """(p_{n-1}, q_{n-1}) of the last index n; the seed (1, 0) when n = 0."""
    if not cf.tail:
        return 1, 0
    c = convergents_of(cf)[-2]
    return c.p, c.q


def evaluate_cf(cf: CF) -> Rat:
    value = Rat(cf.tail[-1]) if cf.tail else None
    for a in reversed(cf.tail[:-1]):
        value = a + 1 / value
    if value is None:
        return Rat(cf.a0)
    return cf.a0 + 1 / value


def cylinder_interval(quotients: Sequence[int]) -> RatInterval:
    """Set of x in [0, 1] whose expansion begins ``[0; a1, ..., an, ...]``.

    The endpoint p_n/q_n belongs to the cylinder; the mediant
    (p_n + p_{n-1})/(q_n + q_{n-1}) = [0; a1, ..., an, 1] does not.
    """
    quotients = tuple(quotients)
    if not quotients:
        raise ValueError("a cylinder needs at least one partial quotient")
    if any(a < 1 for a in quotients):
        raise ValueError(f"partial quotients must be >= 1, got {quotients}")
    conv = convergents_of(CF(0, quotients))
    last, prev = conv[-1], conv[-2]
    end = last.value
    med = mediant(end, prev.value)
    if len(quotients) % 2 == 0:
        return RatInterval(end, med, lo_closed=True, hi_closed=False)
    return RatInterval(med, end, lo_closed=False, hi_closed=True)


def starts_cylinder(x: Rat, quotients: Sequence[int]) -> bool:
    """Brute-force cylinder membership read off the expansions of ``x``.

    ``x`` is in the cylinder when it equals ``[0; a1..an]`` exactly, or its
    canonical expansion is strictly longer and begins with ``a1..an``.  The
    companion expansion ``[0; a1..an, 1]`` alone does not qualify.
    """
    quotients = tuple(quotients)
    canon = expand_canonical(x)
    if canon.a0 != 0 and x != 1:
        return False
    for cf in (canon, companion_of(canon)):
        if cf.a0 == 0 and cf.tail == quotients:
            return True
    return canon.a0 == 0 and len(canon.tail) > len(quotients) and canon.tail[: len(quotients)] == quotients
