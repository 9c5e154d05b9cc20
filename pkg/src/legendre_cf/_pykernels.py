"""Pure-Python grid kernel; the reference for the compiled one in ``_ckernels.pyx``.

Everything is integer arithmetic on numerators and denominators.  For one
alpha = a/d and one table row (p/q with precomputed neighbours) the kernel
sets one bit per predicate; the harness turns the bits into checks.

Table row columns::

    p, q, pe_p, pe_q, po_p, po_q, lo_p, lo_q, hi_p, hi_q

pe/po are the penultimate convergents of the even- and odd-indexed
expansions of p/q; lo/hi are the Farey neighbours of p/q.
"""

import numpy as np

from ._bits import (
    AT_MEDIANT, CANON, CINT0, COMP, CONS_CANON0, CONS_COMP0, DUJ_DOMAIN0,
    DUJ_FOUND0, EQUAL, FATOU_DOMAIN, FATOU_FOUND, INTERVAL, LUCAS, NONSTRICT,
    PAIR_STRIDE, RAW0, STRICT, THM_A,
)

BACKEND = "python"


def ladder(a, d):
    """Convergents (p_n, q_n) of the canonical expansion of a/d, d > 0."""
    out = []
    p2, q2, p1, q1 = 0, 1, 1, 0
    num, den = a, d
    while True:
        k, r = divmod(num, den)
        p, q = k * p1 + p2, k * q1 + q2
        out.append((p, q))
        p2, q2, p1, q1 = p1, q1, p, q
        if r == 0:
            return out
        num, den = den, r


def _scan_one(a, d, rows, cvals):
    canon = ladder(a, d)
    prev = canon[-2] if len(canon) > 1 else (1, 0)
    last = canon[-1]
    comp = canon[:-1] + [(last[0] - prev[0], last[1] - prev[1]), last]
    canon_set, comp_set = set(canon), set(comp)
    canon_adj, comp_adj = set(zip(canon, canon[1:])), set(zip(comp, comp[1:]))
    rungs = list(zip(canon, canon[1:]))
    seeded = list(zip([(1, 0)] + canon, canon))

    masks = []
    for p, q, pe_p, pe_q, po_p, po_q, lo_p, lo_q, hi_p, hi_q in rows:
        m = 0
        if (p, q) in canon_set:
            m |= CANON
        if (p, q) in comp_set:
            m |= COMP
        e = a * q - p * d
        ae = abs(e)
        if e == 0:
            m |= EQUAL | STRICT | NONSTRICT | LUCAS | THM_A
        else:
            pp, qq = (pe_p, pe_q) if e > 0 else (po_p, po_q)
            # |theta| = q*ae/d against q/(q+q')
            lhs, rhs = q * ae * (q + qq), q * d
            if lhs < rhs:
                m |= STRICT
            if lhs <= rhs:
                m |= NONSTRICT
            # |alpha - p/q| = ae/(d q) against 1/(q (q+q'))
            if ae * q * (q + qq) < d * q:
                m |= LUCAS
            if 2 * q * ae < d:
                m |= THM_A
            if a * (q + qq) == d * (p + pp):
                m |= AT_MEDIANT
        if a * (q + lo_q) > d * (p + lo_p) and a * (q + hi_q) < d * (p + hi_p):
            m |= INTERVAL

        if q * ae < d:
            m |= FATOU_DOMAIN
            found = (p, q) in canon_set
            if not found:
                for (p0, q0), (p1, q1) in rungs:
                    if p * (q1 + q0) == q * (p1 + p0) or (q1 > q0 and p * (q1 - q0) == q * (p1 - p0)):
                        found = True
                        break
            if found:
                m |= FATOU_FOUND

        for i, (cn, cd) in enumerate(cvals):
            if ae * q * cd < cn * d:
                m |= DUJ_DOMAIN0 << i
                for (p0, q0), (p1, q1) in seeded:
                    det = p1 * q0 - p0 * q1
                    r = (p * q0 - q * p0) * det
                    t = (p1 * q - q1 * p) * det
                    if r >= 0 and r * abs(t) * cd < 2 * cn and r * p1 + t * p0 == p and r * q1 + t * q0 == q:
                        m |= DUJ_FOUND0 << i
                        break

        for j, (pp, qq) in enumerate(((lo_p, lo_q), (hi_p, hi_q))):
            shift = j * PAIR_STRIDE
            if ae * (q + qq) < d:
                m |= RAW0 << shift
            if ((pp, qq), (p, q)) in canon_adj:
                m |= CONS_CANON0 << shift
            if ((pp, qq), (p, q)) in comp_adj:
                m |= CONS_COMP0 << shift
            mp, mq = p + pp, q + qq
            if mp * q > p * mq:
                inside = a * q >= p * d and a * mq < d * mp
            else:
                inside = a * mq > d * mp and a * q <= p * d
            if inside:
                m |= CINT0 << shift
        masks.append(m)
    return masks


def scan_block(alphas, rows, cvals):
    """Masks of shape (len(alphas), len(rows)), dtype uint32."""
    rows = [tuple(int(v) for v in r) for r in rows]
    cvals = [(int(cn), int(cd)) for cn, cd in cvals]
    out = np.zeros((len(alphas), len(rows)), dtype=np.uint32)
    for i, (a, d) in enumerate(alphas):
        if rows:
            out[i] = _scan_one(int(a), int(d), rows, cvals)
    return out
