# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled grid kernel.  Mirrors ``_pykernels`` bit for bit on 64-bit ints;
callers must keep inputs within ``MAX_INPUT`` (see ``kernels``)."""

import numpy as np
cimport numpy as cnp

cnp.import_array()

BACKEND = "cython"

# bit layout, kept equal to _bits.LAYOUT (checked by the tests)
cdef enum:
    CANON = 1 << 0
    COMP = 1 << 1
    EQUAL = 1 << 2
    STRICT = 1 << 3
    NONSTRICT = 1 << 4
    LUCAS = 1 << 5
    THM_A = 1 << 6
    INTERVAL = 1 << 7
    AT_MEDIANT = 1 << 8
    FATOU_DOMAIN = 1 << 9
    FATOU_FOUND = 1 << 10
    DUJ_DOMAIN0 = 1 << 11
    DUJ_FOUND0 = 1 << 14
    MAX_C = 3
    RAW0 = 1 << 17
    CONS_CANON0 = 1 << 18
    CONS_COMP0 = 1 << 19
    CINT0 = 1 << 20
    PAIR_STRIDE = 4
    MAXLEN = 64

LAYOUT = {
    "CANON": CANON, "COMP": COMP, "EQUAL": EQUAL, "STRICT": STRICT,
    "NONSTRICT": NONSTRICT, "LUCAS": LUCAS, "THM_A": THM_A,
    "INTERVAL": INTERVAL, "AT_MEDIANT": AT_MEDIANT,
    "FATOU_DOMAIN": FATOU_DOMAIN, "FATOU_FOUND": FATOU_FOUND,
    "DUJ_DOMAIN0": DUJ_DOMAIN0, "DUJ_FOUND0": DUJ_FOUND0, "MAX_C": MAX_C,
    "RAW0": RAW0, "CONS_CANON0": CONS_CANON0, "CONS_COMP0": CONS_COMP0,
    "CINT0": CINT0, "PAIR_STRIDE": PAIR_STRIDE,
}

ctypedef long long i64


cdef inline i64 iabs(i64 x) nogil:
    return -x if x < 0 else x


cdef inline i64 floordiv(i64 a, i64 b) nogil:
    # b > 0
    cdef i64 q = a / b
    if (a % b != 0) and (a < 0):
        q -= 1
    return q


cdef int build_ladder(i64 a, i64 d, i64* P, i64* Q) nogil:
    """Canonical convergents into P[0..m], Q[0..m]; returns m + 1."""
    cdef i64 p2 = 0, q2 = 1, p1 = 1, q1 = 0, num = a, den = d, k, r, p, q
    cdef int n = 0
    while n < MAXLEN:
        k = floordiv(num, den)
        r = num - k * den
        p = k * p1 + p2
        q = k * q1 + q2
        P[n] = p
        Q[n] = q
        n += 1
        p2 = p1; q2 = q1; p1 = p; q1 = q
        if r == 0:
            break
        num = den
        den = r
    return n


cdef inline bint adjacent(i64* P, i64* Q, int n, i64 pp, i64 qq, i64 p, i64 q) nogil:
    cdef int k
    for k in range(1, n):
        if P[k] == p and Q[k] == q and P[k - 1] == pp and Q[k - 1] == qq:
            return True
    return False


cdef inline bint member(i64* P, i64* Q, int n, i64 p, i64 q) nogil:
    cdef int k
    for k in range(n):
        if P[k] == p and Q[k] == q:
            return True
    return False


cdef void scan_one(i64 a, i64 d, const i64[:, :] rows, i64* cn, i64* cd, int nc,
                   cnp.uint32_t[:] out) nogil:
    cdef i64 P[MAXLEN]
    cdef i64 Q[MAXLEN]
    cdef i64 CP[MAXLEN + 1]
    cdef i64 CQ[MAXLEN + 1]
    cdef i64 SP[MAXLEN + 1]
    cdef i64 SQ[MAXLEN + 1]
    cdef int n = build_ladder(a, d, P, Q)
    cdef int nc2 = n + 1, ns = n + 1
    cdef int i, j, k, row
    cdef i64 prev_p, prev_q
    cdef i64 p, q, e, ae, pp, qq, lhs, rhs, p0, q0, p1, q1, det, r, t, mp, mq
    cdef cnp.uint32_t m
    cdef bint found, inside

    if n > 1:
        prev_p = P[n - 2]; prev_q = Q[n - 2]
    else:
        prev_p = 1; prev_q = 0
    for k in range(n - 1):
        CP[k] = P[k]; CQ[k] = Q[k]
    CP[n - 1] = P[n - 1] - prev_p
    CQ[n - 1] = Q[n - 1] - prev_q
    CP[n] = P[n - 1]
    CQ[n] = Q[n - 1]
    SP[0] = 1; SQ[0] = 0
    for k in range(n):
        SP[k + 1] = P[k]; SQ[k + 1] = Q[k]

    for row in range(rows.shape[0]):
        p = rows[row, 0]; q = rows[row, 1]
        m = 0
        if member(P, Q, n, p, q):
            m |= CANON
        if member(CP, CQ, nc2, p, q):
            m |= COMP
        e = a * q - p * d
        ae = iabs(e)
        if e == 0:
            m |= EQUAL | STRICT | NONSTRICT | LUCAS | THM_A
        else:
            if e > 0:
                pp = rows[row, 2]; qq = rows[row, 3]
            else:
                pp = rows[row, 4]; qq = rows[row, 5]
            lhs = q * ae * (q + qq)
            rhs = q * d
            if lhs < rhs:
                m |= STRICT
            if lhs <= rhs:
                m |= NONSTRICT
            if ae * q * (q + qq) < d * q:
                m |= LUCAS
            if 2 * q * ae < d:
                m |= THM_A
            if a * (q + qq) == d * (p + pp):
                m |= AT_MEDIANT
        if (a * (q + rows[row, 7]) > d * (p + rows[row, 6])
                and a * (q + rows[row, 9]) < d * (p + rows[row, 8])):
            m |= INTERVAL

        if q * ae < d:
            m |= FATOU_DOMAIN
            found = member(P, Q, n, p, q)
            k = 0
            while not found and k < n - 1:
                p0 = P[k]; q0 = Q[k]; p1 = P[k + 1]; q1 = Q[k + 1]
                if p * (q1 + q0) == q * (p1 + p0):
                    found = True
                elif q1 > q0 and p * (q1 - q0) == q * (p1 - p0):
                    found = True
                k += 1
            if found:
                m |= FATOU_FOUND

        for i in range(nc):
            if ae * q * cd[i] < cn[i] * d:
                m |= DUJ_DOMAIN0 << i
                for k in range(ns - 1):
                    p0 = SP[k]; q0 = SQ[k]; p1 = SP[k + 1]; q1 = SQ[k + 1]
                    det = p1 * q0 - p0 * q1
                    r = (p * q0 - q * p0) * det
                    t = (p1 * q - q1 * p) * det
                    if (r >= 0 and r * iabs(t) * cd[i] < 2 * cn[i]
                            and r * p1 + t * p0 == p and r * q1 + t * q0 == q):
                        m |= DUJ_FOUND0 << i
                        break

        for j in range(2):
            pp = rows[row, 6 + 2 * j]; qq = rows[row, 7 + 2 * j]
            if ae * (q + qq) < d:
                m |= RAW0 << (j * PAIR_STRIDE)
            if adjacent(P, Q, n, pp, qq, p, q):
                m |= CONS_CANON0 << (j * PAIR_STRIDE)
            if adjacent(CP, CQ, nc2, pp, qq, p, q):
                m |= CONS_COMP0 << (j * PAIR_STRIDE)
            mp = p + pp; mq = q + qq
            if mp * q > p * mq:
                inside = a * q >= p * d and a * mq < d * mp
            else:
                inside = a * mq > d * mp and a * q <= p * d
            if inside:
                m |= CINT0 << (j * PAIR_STRIDE)
        out[row] = m


def scan_block(alphas, rows, cvals):
    """Masks of shape (len(alphas), len(rows)), dtype uint32."""
    cdef const i64[:, :] ar = np.ascontiguousarray(np.asarray(alphas, dtype=np.int64).reshape(-1, 2))
    cdef const i64[:, :] rv = np.ascontiguousarray(np.asarray(rows, dtype=np.int64).reshape(-1, 10))
    cdef i64 cn[MAX_C]
    cdef i64 cd[MAX_C]
    cdef int nc = len(cvals), i
    if nc > MAX_C:
        raise ValueError(f"at most {MAX_C} c values are supported")
    for i in range(nc):
        cn[i] = cvals[i][0]
        cd[i] = cvals[i][1]
    out = np.zeros((ar.shape[0], rv.shape[0]), dtype=np.uint32)
    cdef cnp.uint32_t[:, :] ov = out
    with nogil:
        for i in range(ar.shape[0]):
            scan_one(ar[i, 0], ar[i, 1], rv, cn, cd, nc, ov[i])
    return out
