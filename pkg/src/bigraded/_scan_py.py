"""Integer scan kernels, numpy implementation.

This is the fallback backend; the compiled extension implements the same
four entry points with identical semantics.  All matrices arrive as
int64 stacks split into rational and sqrt2 components (X = R + sqrt2*S),
so every product is computed exactly in integer arithmetic:

    (R1 + sqrt2 S1)(R2 + sqrt2 S2) = (R1 R2 + 2 S1 S2) + sqrt2 (R1 S2 + S1 R2)

Scan order is lexicographic in the element indices, then row-major in
the entry position; every kernel reports the first failing case in that
order (indices -1 mean no failure).
"""

from __future__ import annotations

import numpy as np

__all__ = ["pair_scan", "jacobi_scan", "form_scan", "trace_scan", "NAME"]

NAME = "python"


def _bracket_tables(R, S, sgn):
    """All pairwise brackets: BR[i, j] = X_i X_j - sgn[i, j] X_j X_i."""
    PR = np.einsum("iab,jbc->ijac", R, R) + 2 * np.einsum("iab,jbc->ijac", S, S)
    PS = np.einsum("iab,jbc->ijac", R, S) + np.einsum("iab,jbc->ijac", S, R)
    s = sgn[:, :, None, None]
    BRR = PR - s * PR.transpose(1, 0, 2, 3)
    BRS = PS - s * PS.transpose(1, 0, 2, 3)
    return BRR, BRS


def _first_true(viol):
    flat = int(np.argmax(viol))
    return np.unravel_index(flat, viol.shape)


def pair_scan(R, S, deg, entdeg, signtab, do_closure=True, do_antisym=True):
    """Grading closure and graded antisymmetry over all ordered pairs.

    Returns (pairs, ci, cj, cr, cc, ai, aj, ar, ac): the pair count and
    the first closure / antisymmetry failure with its witness entry.
    """
    m = R.shape[0]
    sgn = signtab[deg[:, None], deg[None, :]]
    BRR, BRS = _bracket_tables(R, S, sgn)
    cfail = (-1, -1, -1, -1)
    afail = (-1, -1, -1, -1)
    if do_closure:
        target = deg[:, None] ^ deg[None, :]
        bad_pos = entdeg[None, None, :, :] != target[:, :, None, None]
        viol = ((BRR != 0) | (BRS != 0)) & bad_pos
        if viol.any():
            cfail = tuple(int(x) for x in _first_true(viol))
    if do_antisym:
        s = sgn[:, :, None, None]
        ZR = BRR + s * BRR.transpose(1, 0, 2, 3)
        ZS = BRS + s * BRS.transpose(1, 0, 2, 3)
        viol = (ZR != 0) | (ZS != 0)
        if viol.any():
            afail = tuple(int(x) for x in _first_true(viol))
    return (m * m, *cfail, *afail)


def _mix(AR, AS, BR, BS, spec):
    rr = np.einsum(spec, AR, BR) + 2 * np.einsum(spec, AS, BS)
    ss = np.einsum(spec, AR, BS) + np.einsum(spec, AS, BR)
    return rr, ss


def jacobi_scan(R, S, deg, signtab, triples=None):
    """Graded Jacobi over all triples (or over the given sorted triple
    index array).  Returns (cases, i, j, k) with the first failure."""
    m = R.shape[0]
    sgn = signtab[deg[:, None], deg[None, :]]
    BRR, BRS = _bracket_tables(R, S, sgn)
    degpair = deg[:, None] ^ deg[None, :]
    if triples is None:
        for i in range(m):
            s1 = signtab[deg[i], degpair][:, :, None, None]
            s2 = signtab[degpair[i, :, None], deg[None, :]][:, :, None, None]
            s3o = sgn[i][:, None, None, None]
            s3 = signtab[deg[:, None], degpair[i][None, :]][:, :, None, None]
            t1f = _mix(R[i], S[i], BRR, BRS, "ab,jkbc->jkac")
            t1b = _mix(BRR, BRS, R[i], S[i], "jkab,bc->jkac")
            t2f = _mix(BRR[i], BRS[i], R, S, "jab,kbc->jkac")
            t2b = _mix(R, S, BRR[i], BRS[i], "kab,jbc->jkac")
            t3f = _mix(R, S, BRR[i], BRS[i], "jab,kbc->jkac")
            t3b = _mix(BRR[i], BRS[i], R, S, "kab,jbc->jkac")
            ZR = (t1f[0] - s1 * t1b[0]) - (t2f[0] - s2 * t2b[0]) \
                - s3o * (t3f[0] - s3 * t3b[0])
            ZS = (t1f[1] - s1 * t1b[1]) - (t2f[1] - s2 * t2b[1]) \
                - s3o * (t3f[1] - s3 * t3b[1])
            viol = (ZR != 0) | (ZS != 0)
            if viol.any():
                j, k, _, _ = _first_true(viol)
                return (m ** 3, i, int(j), int(k))
        return (m ** 3, -1, -1, -1)
    cases = len(triples)
    start = 0
    while start < cases:
        i = int(triples[start, 0])
        end = start
        while end < cases and triples[end, 0] == i:
            end += 1
        js = triples[start:end, 1]
        ks = triples[start:end, 2]
        s1 = signtab[deg[i], deg[js] ^ deg[ks]][:, None, None]
        s2 = signtab[deg[i] ^ deg[js], deg[ks]][:, None, None]
        s3o = sgn[i, js][:, None, None]
        s3 = signtab[deg[js], deg[i] ^ deg[ks]][:, None, None]
        t1f = _mix(R[i], S[i], BRR[js, ks], BRS[js, ks], "ab,tbc->tac")
        t1b = _mix(BRR[js, ks], BRS[js, ks], R[i], S[i], "tab,bc->tac")
        t2f = _mix(BRR[i, js], BRS[i, js], R[ks], S[ks], "tab,tbc->tac")
        t2b = _mix(R[ks], S[ks], BRR[i, js], BRS[i, js], "tab,tbc->tac")
        t3f = _mix(R[js], S[js], BRR[i, ks], BRS[i, ks], "tab,tbc->tac")
        t3b = _mix(BRR[i, ks], BRS[i, ks], R[js], S[js], "tab,tbc->tac")
        ZR = (t1f[0] - s1 * t1b[0]) - (t2f[0] - s2 * t2b[0]) \
            - s3o * (t3f[0] - s3 * t3b[0])
        ZS = (t1f[1] - s1 * t1b[1]) - (t2f[1] - s2 * t2b[1]) \
            - s3o * (t3f[1] - s3 * t3b[1])
        viol = (ZR != 0) | (ZS != 0)
        if viol.any():
            t, _, _ = _first_true(viol)
            return (cases, i, int(triples[start + t, 1]), int(triples[start + t, 2]))
        start = end
    return (cases, -1, -1, -1)


def form_scan(R, S, deg, signtab, formR, tsign):
    """Membership of every pairwise bracket in the space cut out by
    X^T F + F X = 0, with X^T the signed transpose given by tsign.
    Returns (pairs, i, j, r, c) with the first violating entry."""
    m = R.shape[0]
    sgn = signtab[deg[:, None], deg[None, :]]
    BRR, BRS = _bracket_tables(R, S, sgn)
    YR = tsign[None, None] * BRR.transpose(0, 1, 3, 2)
    YS = tsign[None, None] * BRS.transpose(0, 1, 3, 2)
    CR = YR @ formR + formR @ BRR
    CS = YS @ formR + formR @ BRS
    viol = (CR != 0) | (CS != 0)
    if viol.any():
        i, j, r, c = _first_true(viol)
        return (m * m, int(i), int(j), int(r), int(c))
    return (m * m, -1, -1, -1, -1)


def trace_scan(R, S, deg, signtab):
    """Traces of all pairwise brackets; returns (pairs, i, j) with the
    first nonzero trace."""
    m = R.shape[0]
    sgn = signtab[deg[:, None], deg[None, :]]
    BRR, BRS = _bracket_tables(R, S, sgn)
    viol = (np.einsum("ijaa->ij", BRR) != 0) | (np.einsum("ijaa->ij", BRS) != 0)
    if viol.any():
        i, j = _first_true(viol)
        return (m * m, int(i), int(j))
    return (m * m, -1, -1)
