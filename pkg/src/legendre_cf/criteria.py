"""Criteria for p/q being a convergent of alpha.

All comparisons are exact.  The normalised error is
``theta = q**2 * (alpha - p/q)``.  Its sign decides which of the two
expansions of p/q is relevant: a convergent with last index n lies below
alpha when n is even and above it when n is odd, so theta > 0 selects the
even-indexed expansion and theta < 0 the odd one.

``alpha == p/q`` is treated as a convergent everywhere, since p/q is the
final convergent of both of its own expansions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .cf_engine import CF, both_expansions, penultimate
from .exact_arith import Rat, RatInterval, mediant
from .farey import farey_neighbors


@dataclass(frozen=True)
class CriterionWitness:
    theta: Rat
    chosen_expansion: CF
    p_prime: int
    # 0 only for an integer p/q whose even expansion is [a0]
    q_prime: int
    bound: Rat
    verdict: bool


def compute_theta(alpha: Rat, pq: Rat) -> Rat:
    pq = Rat(pq)
    return pq.denominator ** 2 * (Rat(alpha) - pq)


def select_expansion(pq: Rat, theta_sign: int) -> CF:
    """Expansion of pq whose last index n has (-1)**n == sign(theta)."""
    if theta_sign == 0:
        raise ValueError("theta_sign must be nonzero")
    want_even = theta_sign > 0
    for cf in both_expansions(pq):
        if (cf.last_index % 2 == 0) == want_even:
            return cf
    raise AssertionError("the two expansions must have opposite parity")


def _witness(alpha: Rat, pq: Rat) -> Tuple[Rat, CF, int, int, Rat]:
    theta = compute_theta(alpha, pq)
    cf = select_expansion(pq, 1 if theta >= 0 else -1)
    p1, q1 = penultimate(cf)
    q = Rat(pq).denominator
    return theta, cf, p1, q1, Rat(q, q + q1)


def legendre_check(alpha: Rat, pq: Rat, strict: bool = False) -> Tuple[bool, CriterionWitness]:
    """``|theta| <= q/(q+q')`` (``<`` with ``strict``), q' from the selected expansion."""
    theta, cf, p1, q1, bound = _witness(alpha, pq)
    if theta == 0:
        ok = True
    elif strict:
        ok = abs(theta) < bound
    else:
        ok = abs(theta) <= bound
    return ok, CriterionWitness(theta, cf, p1, q1, bound, ok)


def theorem_a_check(alpha: Rat, pq: Rat) -> bool:
    """Sufficient condition ``|alpha - p/q| < 1/(2 q^2)``."""
    pq = Rat(pq)
    return abs(Rat(alpha) - pq) < Rat(1, 2 * pq.denominator ** 2)


def lucas_bound(q: int, q_prime: int) -> Rat:
    return Rat(1, q * (q + q_prime))


def lucas_check(alpha: Rat, pq: Rat) -> Tuple[bool, CriterionWitness]:
    """``|alpha - p/q| < 1/(g_p (g_p + g_{p-1}))`` on the expansion chosen by
    the side of alpha.  Agrees with the strict Legendre check."""
    alpha, pq = Rat(alpha), Rat(pq)
    theta, cf, p1, q1, bound = _witness(alpha, pq)
    distance = abs(alpha - pq)
    ok = distance == 0 or distance < lucas_bound(pq.denominator, q1)
    return ok, CriterionWitness(theta, cf, p1, q1, bound, ok)


def legendre_interval(pq: Rat) -> RatInterval:
    """Open interval between the mediants of p/q with its two Farey neighbours."""
    pq = Rat(pq)
    nb = farey_neighbors(pq)
    return RatInterval(mediant(pq, nb.lower), mediant(pq, nb.upper))


def _require_consecutive_pair(pq: Rat, p2q2: Rat) -> None:
    pq, p2q2 = Rat(pq), Rat(p2q2)
    p, q = pq.numerator, pq.denominator
    p1, q1 = p2q2.numerator, p2q2.denominator
    if abs(p * q1 - p1 * q) != 1:
        raise ValueError(f"|p q' - p' q| must be 1 for {pq}, {p2q2}")
    if q < q1:
        raise ValueError(f"need q >= q' for {pq}, {p2q2}")


def consecutive_interval(pq: Rat, p2q2: Rat) -> RatInterval:
    """Half-open interval of xi for which p'/q', p/q are consecutive convergents.

    p/q is included, the mediant (p+p')/(q+q') is not.  The mediant sits at
    distance 1/(q(q+q')) from p/q.
    """
    _require_consecutive_pair(pq, p2q2)
    pq, p2q2 = Rat(pq), Rat(p2q2)
    med = mediant(pq, p2q2)
    if med > pq:
        return RatInterval(pq, med, lo_closed=True, hi_closed=False)
    return RatInterval(med, pq, lo_closed=False, hi_closed=True)


def lehmer_raw_check(xi: Rat, pq: Rat, p2q2: Rat) -> bool:
    """The symmetric inequality ``|xi - p/q| < 1/(q(q+q'))`` taken literally.

    Not sufficient on its own: xi must also lie between p/q and p'/q'.
    """
    _require_consecutive_pair(pq, p2q2)
    pq, p2q2 = Rat(pq), Rat(p2q2)
    return abs(Rat(xi) - pq) < lucas_bound(pq.denominator, p2q2.denominator)
