# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Integer scan kernels, compiled implementation.

Entry points and semantics match the numpy backend exactly (same
argument stacks, same lexicographic first-failure reporting); the
difference is strategy: products are computed pair by pair with O(n^2)
scratch and every scan exits at the first failure.
"""

from libc.stdint cimport int64_t

import numpy as np

__all__ = ["pair_scan", "jacobi_scan", "form_scan", "trace_scan", "NAME"]

NAME = "compiled"


cdef void _zero(int64_t[:, ::1] M) noexcept:
    cdef Py_ssize_t a, b, n = M.shape[0]
    for a in range(n):
        for b in range(n):
            M[a, b] = 0


cdef void _matmul_acc(int64_t[:, ::1] AR, int64_t[:, ::1] AS,
                      int64_t[:, ::1] BR, int64_t[:, ::1] BS,
                      int64_t[:, ::1] CR, int64_t[:, ::1] CS,
                      int64_t coef) noexcept:
    # C += coef * A B for split values X = R + sqrt2 S:
    # (A B)_R = AR BR + 2 AS BS, (A B)_S = AR BS + AS BR
    cdef Py_ssize_t a, b, c, n = AR.shape[0]
    cdef int64_t accR, accS
    for a in range(n):
        for c in range(n):
            accR = 0
            accS = 0
            for b in range(n):
                accR += AR[a, b] * BR[b, c] + 2 * AS[a, b] * BS[b, c]
                accS += AR[a, b] * BS[b, c] + AS[a, b] * BR[b, c]
            CR[a, c] += coef * accR
            CS[a, c] += coef * accS


cdef void _bracket(int64_t[:, :, ::1] R, int64_t[:, :, ::1] S,
                   Py_ssize_t i, Py_ssize_t j, int64_t sgn,
                   int64_t[:, ::1] BR, int64_t[:, ::1] BS):
    # X_i X_j - sgn X_j X_i
    _zero(BR)
    _zero(BS)
    _matmul_acc(R[i], S[i], R[j], S[j], BR, BS, 1)
    _matmul_acc(R[j], S[j], R[i], S[i], BR, BS, -sgn)


cdef Py_ssize_t _first_nonzero(int64_t[:, ::1] A, int64_t[:, ::1] B) noexcept:
    # packed r * n + c of the first nonzero entry, -1 if none
    cdef Py_ssize_t r, c, n = A.shape[0]
    for r in range(n):
        for c in range(n):
            if A[r, c] != 0 or B[r, c] != 0:
                return r * n + c
    return -1


def pair_scan(int64_t[:, :, ::1] R, int64_t[:, :, ::1] S,
              int64_t[::1] deg, int64_t[:, ::1] entdeg,
              int64_t[:, ::1] signtab,
              bint do_closure=True, bint do_antisym=True):
    """Grading closure and graded antisymmetry over all ordered pairs.

    Returns (pairs, ci, cj, cr, cc, ai, aj, ar, ac): the pair count and
    the first closure / antisymmetry failure with its witness entry.
    """
    cdef Py_ssize_t m = R.shape[0], n = R.shape[1]
    cdef Py_ssize_t i, j, r, c, pos
    cdef int64_t s, target
    cdef Py_ssize_t ci = -1, cj = -1, cr = -1, cc = -1
    cdef Py_ssize_t ai = -1, aj = -1, ar = -1, ac = -1
    BRR_a = np.zeros((n, n), dtype=np.int64)
    BRS_a = np.zeros((n, n), dtype=np.int64)
    B2R_a = np.zeros((n, n), dtype=np.int64)
    B2S_a = np.zeros((n, n), dtype=np.int64)
    ZR_a = np.zeros((n, n), dtype=np.int64)
    ZS_a = np.zeros((n, n), dtype=np.int64)
    cdef int64_t[:, ::1] BRR = BRR_a, BRS = BRS_a
    cdef int64_t[:, ::1] B2R = B2R_a, B2S = B2S_a
    cdef int64_t[:, ::1] ZR = ZR_a, ZS = ZS_a
    cdef bint need_c, need_a
    for i in range(m):
        for j in range(m):
            need_c = do_closure and ci < 0
            need_a = do_antisym and ai < 0
            if not (need_c or need_a):
                break
            s = signtab[deg[i], deg[j]]
            _bracket(R, S, i, j, s, BRR, BRS)
            if need_c:
                target = deg[i] ^ deg[j]
                for r in range(n):
                    if ci >= 0:
                        break
                    for c in range(n):
                        if (BRR[r, c] != 0 or BRS[r, c] != 0) \
                                and entdeg[r, c] != target:
                            ci = i; cj = j; cr = r; cc = c
                            break
            if need_a:
                _bracket(R, S, j, i, signtab[deg[j], deg[i]], B2R, B2S)
                for r in range(n):
                    for c in range(n):
                        ZR[r, c] = BRR[r, c] + s * B2R[r, c]
                        ZS[r, c] = BRS[r, c] + s * B2S[r, c]
                pos = _first_nonzero(ZR, ZS)
                if pos >= 0:
                    ai = i; aj = j; ar = pos // n; ac = pos % n
        if (not do_closure or ci >= 0) and (not do_antisym or ai >= 0):
            break
    return (m * m, int(ci), int(cj), int(cr), int(cc),
            int(ai), int(aj), int(ar), int(ac))


def jacobi_scan(int64_t[:, :, ::1] R, int64_t[:, :, ::1] S,
                int64_t[::1] deg, int64_t[:, ::1] signtab,
                object triples=None):
    """Graded Jacobi over all triples (or over the given sorted triple
    index array).  Returns (cases, i, j, k) with the first failure."""
    cdef Py_ssize_t m = R.shape[0], n = R.shape[1]
    cdef Py_ssize_t i, j, k, t, cases
    BijR_a = np.zeros((n, n), dtype=np.int64)
    BijS_a = np.zeros((n, n), dtype=np.int64)
    BjkR_a = np.zeros((n, n), dtype=np.int64)
    BjkS_a = np.zeros((n, n), dtype=np.int64)
    BikR_a = np.zeros((n, n), dtype=np.int64)
    BikS_a = np.zeros((n, n), dtype=np.int64)
    ZR_a = np.zeros((n, n), dtype=np.int64)
    ZS_a = np.zeros((n, n), dtype=np.int64)
    cdef int64_t[:, ::1] BijR = BijR_a, BijS = BijS_a
    cdef int64_t[:, ::1] BjkR = BjkR_a, BjkS = BjkS_a
    cdef int64_t[:, ::1] BikR = BikR_a, BikS = BikS_a
    cdef int64_t[:, ::1] ZR = ZR_a, ZS = ZS_a
    cdef int64_t[:, ::1] T
    if triples is None:
        for i in range(m):
            for j in range(m):
                _bracket(R, S, i, j, signtab[deg[i], deg[j]], BijR, BijS)
                for k in range(m):
                    if _jacobi_case(R, S, deg, signtab, i, j, k,
                                    BijR, BijS, BjkR, BjkS, BikR, BikS,
                                    ZR, ZS):
                        return (m * m * m, int(i), int(j), int(k))
        return (m * m * m, -1, -1, -1)
    T = triples
    cases = T.shape[0]
    for t in range(cases):
        i = T[t, 0]; j = T[t, 1]; k = T[t, 2]
        _bracket(R, S, i, j, signtab[deg[i], deg[j]], BijR, BijS)
        if _jacobi_case(R, S, deg, signtab, i, j, k,
                        BijR, BijS, BjkR, BjkS, BikR, BikS, ZR, ZS):
            return (int(cases), int(i), int(j), int(k))
    return (int(cases), -1, -1, -1)


cdef bint _jacobi_case(int64_t[:, :, ::1] R, int64_t[:, :, ::1] S,
                       int64_t[::1] deg, int64_t[:, ::1] signtab,
                       Py_ssize_t i, Py_ssize_t j, Py_ssize_t k,
                       int64_t[:, ::1] BijR, int64_t[:, ::1] BijS,
                       int64_t[:, ::1] BjkR, int64_t[:, ::1] BjkS,
                       int64_t[:, ::1] BikR, int64_t[:, ::1] BikS,
                       int64_t[:, ::1] ZR, int64_t[:, ::1] ZS):
    # Z = [Xi,[Xj,Xk]] - [[Xi,Xj],Xk] - e(i,j) [Xj,[Xi,Xk]]
    # BijR/BijS must hold the (i,j) bracket already
    cdef int64_t s1, s2, s3o, s3
    _bracket(R, S, j, k, signtab[deg[j], deg[k]], BjkR, BjkS)
    _bracket(R, S, i, k, signtab[deg[i], deg[k]], BikR, BikS)
    s1 = signtab[deg[i], deg[j] ^ deg[k]]
    s2 = signtab[deg[i] ^ deg[j], deg[k]]
    s3o = signtab[deg[i], deg[j]]
    s3 = signtab[deg[j], deg[i] ^ deg[k]]
    _zero(ZR)
    _zero(ZS)
    _matmul_acc(R[i], S[i], BjkR, BjkS, ZR, ZS, 1)
    _matmul_acc(BjkR, BjkS, R[i], S[i], ZR, ZS, -s1)
    _matmul_acc(BijR, BijS, R[k], S[k], ZR, ZS, -1)
    _matmul_acc(R[k], S[k], BijR, BijS, ZR, ZS, s2)
    _matmul_acc(R[j], S[j], BikR, BikS, ZR, ZS, -s3o)
    _matmul_acc(BikR, BikS, R[j], S[j], ZR, ZS, s3o * s3)
    return _first_nonzero(ZR, ZS) >= 0


def form_scan(int64_t[:, :, ::1] R, int64_t[:, :, ::1] S,
              int64_t[::1] deg, int64_t[:, ::1] signtab,
              int64_t[:, ::1] formR, int64_t[:, ::1] tsign):
    """Membership of every pairwise bracket in the space cut out by
    X^T F + F X = 0, with X^T the signed transpose given by tsign.
    Returns (pairs, i, j, r, c) with the first violating entry."""
    cdef Py_ssize_t m = R.shape[0], n = R.shape[1]
    cdef Py_ssize_t i, j, r, c, b
    cdef int64_t accR, accS
    BRR_a = np.zeros((n, n), dtype=np.int64)
    BRS_a = np.zeros((n, n), dtype=np.int64)
    cdef int64_t[:, ::1] BRR = BRR_a, BRS = BRS_a
    for i in range(m):
        for j in range(m):
            _bracket(R, S, i, j, signtab[deg[i], deg[j]], BRR, BRS)
            for r in range(n):
                for c in range(n):
                    accR = 0
                    accS = 0
                    for b in range(n):
                        accR += tsign[r, b] * BRR[b, r] * formR[b, c] \
                            + formR[r, b] * BRR[b, c]
                        accS += tsign[r, b] * BRS[b, r] * formR[b, c] \
                            + formR[r, b] * BRS[b, c]
                    if accR != 0 or accS != 0:
                        return (m * m, int(i), int(j), int(r), int(c))
    return (m * m, -1, -1, -1, -1)


def trace_scan(int64_t[:, :, ::1] R, int64_t[:, :, ::1] S,
               int64_t[::1] deg, int64_t[:, ::1] signtab):
    """Traces of all pairwise brackets; returns (pairs, i, j) with the
    first nonzero trace."""
    cdef Py_ssize_t m = R.shape[0], n = R.shape[1]
    cdef Py_ssize_t i, j, a
    cdef int64_t trR, trS
    BRR_a = np.zeros((n, n), dtype=np.int64)
    BRS_a = np.zeros((n, n), dtype=np.int64)
    cdef int64_t[:, ::1] BRR = BRR_a, BRS = BRS_a
    for i in range(m):
        for j in range(m):
            _bracket(R, S, i, j, signtab[deg[i], deg[j]], BRR, BRS)
            trR = 0
            trS = 0
            for a in range(n):
                trR += BRR[a, a]
                trS += BRS[a, a]
            if trR != 0 or trS != 0:
                return (m * m, int(i), int(j))
    return (m * m, -1, -1)
