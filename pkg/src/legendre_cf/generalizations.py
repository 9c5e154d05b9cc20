"""Approximations weaker than Legendre's bound.

If ``|alpha - p/q| < 1/q**2`` then p/q is a convergent or one of the two
intermediate fractions next to it (:func:`fatou_classify`).  More generally,
under ``|alpha - p/q| < c/q**2`` the pair (p, q) splits as
``r * (p_{n+1}, q_{n+1}) +/- s * (p_n, q_n)`` with ``r*s < 2c``
(:func:`dujella_decompose`).

Both use the convergent ladder of alpha's canonical expansion.  For a
rational alpha the ladder is finite; :func:`dujella_decompose` also uses the
recurrence seed ``(p_{-1}, q_{-1}) = (1, 0)`` as the rung below index 0.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Tuple

from .cf_engine import convergents_of, expand_canonical
from .exact_arith import Rat


class FatouForm(enum.Enum):
    CONVERGENT = "convergent"
    MEDIANT_PLUS = "mediant-plus"
    MEDIANT_MINUS = "mediant-minus"


@dataclass(frozen=True)
class FatouClass:
    form: FatouForm
    n: int

    def __str__(self) -> str:
        return f"{self.form.value} n={self.n}"


@dataclass(frozen=True)
class DujellaDecomp:
    n: int
    r: int
    s: int
    sign: str  # "plus" or "minus"

    def __str__(self) -> str:
        return f"n={self.n} r={self.r} s={self.s} {self.sign}"


@lru_cache(maxsize=4096)
def _ladder(alpha: Rat) -> Tuple[Tuple[int, int], ...]:
    return tuple((c.p, c.q) for c in convergents_of(expand_canonical(alpha)))


def fatou_form_value(alpha: Rat, cls: FatouClass) -> Optional[Rat]:
    """The fraction a classification denotes, or None if it does not exist."""
    ladder = _ladder(Rat(alpha))
    n = cls.n
    if cls.form is FatouForm.CONVERGENT:
        p, q = ladder[n]
        return Rat(p, q)
    (p0, q0), (p1, q1) = ladder[n], ladder[n + 1]
    if cls.form is FatouForm.MEDIANT_PLUS:
        return Rat(p1 + p0, q1 + q0)
    if q1 == q0:
        return None
    return Rat(p1 - p0, q1 - q0)


def fatou_classify(alpha: Rat, pq: Rat) -> Optional[FatouClass]:
    """First matching form, trying convergents before mediants and smaller n first.

    Returns None when nothing matches, which cannot happen while
    ``|alpha - p/q| < 1/q**2``.
    """
    alpha, pq = Rat(alpha), Rat(pq)
    ladder = _ladder(alpha)
    p, q = pq.numerator, pq.denominator
    for n, (pn, qn) in enumerate(ladder):
        if (pn, qn) == (p, q):
            return FatouClass(FatouForm.CONVERGENT, n)
    rungs = list(zip(ladder, ladder[1:]))
    for n, ((p0, q0), (p1, q1)) in enumerate(rungs):
        if p * (q1 + q0) == q * (p1 + p0):
            return FatouClass(FatouForm.MEDIANT_PLUS, n)
    for n, ((p0, q0), (p1, q1)) in enumerate(rungs):
        if q1 > q0 and p * (q1 - q0) == q * (p1 - p0):
            return FatouClass(FatouForm.MEDIANT_MINUS, n)
    return None


def dujella_decompose(alpha: Rat, pq: Rat, c: Rat) -> List[DujellaDecomp]:
    """All decompositions (n, r, s, sign) with r, s >= 0 and r*s < 2c.

    Sorted by (r*s, n).  n = -1 means the rung (p_0, q_0) over the seed (1, 0).
    """
    alpha, pq, c = Rat(alpha), Rat(pq), Rat(c)
    if c <= 0:
        raise ValueError(f"c must be positive, got {c}")
    p, q = pq.numerator, pq.denominator
    if not abs(alpha - pq) < c / q ** 2:
        raise ValueError(f"need |alpha - p/q| < c/q^2; fails for alpha={alpha}, p/q={pq}, c={c}")
    ladder = ((1, 0),) + _ladder(alpha)
    found = []
    for k in range(len(ladder) - 1):
        (pn, qn), (pn1, qn1) = ladder[k], ladder[k + 1]
        det = pn1 * qn - pn * qn1  # +1 or -1
        r = (p * qn - q * pn) * det
        t = (pn1 * q - qn1 * p) * det
        if r < 0 or r * abs(t) >= 2 * c:
            continue
        found.append(DujellaDecomp(k - 1, r, abs(t), "plus" if t >= 0 else "minus"))
    found.sort(key=lambda d: (d.r * d.s, d.n))
    return found


def dujella_value(alpha: Rat, d: DujellaDecomp) -> Tuple[int, int]:
    """Re-evaluates (r p_{n+1} +/- s p_n, r q_{n+1} +/- s q_n)."""
    ladder = ((1, 0),) + _ladder(Rat(alpha))
    (pn, qn), (pn1, qn1) = ladder[d.n + 1], ladder[d.n + 2]
    t = d.s if d.sign == "plus" else -d.s
    return d.r * pn1 + t * pn, d.r * qn1 + t * qn
