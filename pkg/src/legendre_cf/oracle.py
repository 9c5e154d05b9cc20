"""Ground truth by enumeration: list the convergents of both expansions of
alpha and look for p/q.  Every criterion is validated against these."""

from __future__ import annotations

import enum

from .cf_engine import both_expansions, convergents_of
from .exact_arith import Rat


class Verdict(enum.Enum):
    BOTH_EXPANSIONS = "BothExpansions"
    CANONICAL_ONLY = "CanonicalOnly"
    COMPANION_ONLY = "CompanionOnly"
    NOT_CONVERGENT = "NotConvergent"

    @classmethod
    def from_flags(cls, canonical: bool, companion: bool) -> "Verdict":
        if canonical and companion:
            return cls.BOTH_EXPANSIONS
        if canonical:
            return cls.CANONICAL_ONLY
        if companion:
            return cls.COMPANION_ONLY
        return cls.NOT_CONVERGENT

    def __str__(self) -> str:
        return self.value


def is_convergent_oracle(alpha: Rat, pq: Rat) -> Verdict:
    pq = Rat(pq)
    flags = []
    for cf in both_expansions(Rat(alpha)):
        flags.append(any(c.value == pq for c in convergents_of(cf)))
    return Verdict.from_flags(*flags)


def consecutive_pair_oracle(xi: Rat, pq: Rat, p2q2: Rat) -> Verdict:
    """Whether p'/q' (index k-1) and p/q (index k) are adjacent convergents
    in each expansion of xi."""
    pq, p2q2 = Rat(pq), Rat(p2q2)
    if abs(pq.numerator * p2q2.denominator - p2q2.numerator * pq.denominator) != 1:
        raise ValueError(f"{pq} and {p2q2} are not a unimodular pair")
    flags = []
    for cf in both_expansions(Rat(xi)):
        values = [c.value for c in convergents_of(cf)]
        flags.append(any(values[k - 1] == p2q2 and values[k] == pq for k in range(1, len(values))))
    return Verdict.from_flags(*flags)
