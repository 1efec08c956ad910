# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels; same contracts as ``_kernels_py``."""

import numpy as np
cimport numpy as cnp
from libc.stdlib cimport malloc, free

cnp.import_array()

ctypedef cnp.int64_t i64

BACKEND = "cython"

# values must match ialt.status
cdef enum:
    DECODED = 0
    NO_CONSISTENT_T = 1
    NON_UNIQUE_SOLUTION = 2
    ROOT_COUNT_MISMATCH = 3
    ROOT_NOT_A_LOCATOR = 4
    NO_ERROR_VALUES = 5


cdef int _rref(i64* M, int nrows, int width, int pivot_cols,
               const i64* exp, const i64* log, i64 order, int* pivots) noexcept nogil:
    cdef int r = 0
    cdef int npiv = 0
    cdef int c, p, i, k
    cdef i64 linv, x, f, lf, tmp
    for c in range(pivot_cols):
        if r == nrows:
            break
        p = r
        while p < nrows and M[p * width + c] == 0:
            p += 1
        if p == nrows:
            continue
        if p != r:
            for k in range(width):
                tmp = M[r * width + k]
                M[r * width + k] = M[p * width + k]
                M[p * width + k] = tmp
        linv = (order - log[M[r * width + c]]) % order
        if linv:
            for k in range(c, width):
                x = M[r * width + k]
                if x:
                    M[r * width + k] = exp[log[x] + linv]
        for i in range(nrows):
            if i == r:
                continue
            f = M[i * width + c]
            if f:
                lf = log[f]
                for k in range(c, width):
                    x = M[r * width + k]
                    if x:
                        M[i * width + k] ^= exp[lf + log[x]]
        pivots[npiv] = c
        npiv += 1
        r += 1
    return npiv


def rref(M, int pivot_cols, exp, log, i64 order):
    cdef cnp.ndarray[i64, ndim=2, mode="c"] A = np.array(M, dtype=np.int64, order="C", ndmin=2)
    cdef const i64[::1] e = np.ascontiguousarray(exp, dtype=np.int64)
    cdef const i64[::1] lg = np.ascontiguousarray(log, dtype=np.int64)
    cdef int nrows = A.shape[0]
    cdef int width = A.shape[1]
    cdef cnp.ndarray[int, ndim=1, mode="c"] piv = np.zeros(max(min(nrows, pivot_cols), 1), dtype=np.intc)
    cdef int npiv
    if nrows == 0 or width == 0:
        return A.reshape(np.shape(M)), np.zeros(0, dtype=np.int64)
    npiv = _rref(&A[0, 0], nrows, width, pivot_cols, &e[0], &lg[0], order, &piv[0])
    return A.reshape(np.shape(M)), piv[:npiv].astype(np.int64)


def encode_batch(msg, G, exp, log, i64 order):
    cdef const i64[:, :, ::1] mv = np.ascontiguousarray(msg, dtype=np.int64)
    cdef const i64[:, ::1] Gv = np.ascontiguousarray(G, dtype=np.int64)
    cdef const i64[::1] e = np.ascontiguousarray(exp, dtype=np.int64)
    cdef const i64[::1] lg = np.ascontiguousarray(log, dtype=np.int64)
    cdef Py_ssize_t B = mv.shape[0], ell = mv.shape[1], k = mv.shape[2], n = Gv.shape[1]
    out = np.zeros((B, ell, n), dtype=np.int64)
    cdef i64[:, :, ::1] ov = out
    cdef Py_ssize_t b, i, j, c
    cdef i64 a, la, g
    with nogil:
        for b in range(B):
            for i in range(ell):
                for j in range(k):
                    a = mv[b, i, j]
                    if a == 0:
                        continue
                    la = lg[a]
                    for c in range(n):
                        g = Gv[j, c]
                        if g:
                            ov[b, i, c] ^= e[la + lg[g]]
    return out


cdef int _decode_one(i64* R, int ell, int n, const i64* logP, int r,
                     const i64* root_pos, const i64* exp, const i64* log, i64 order,
                     int t_max, i64* S, i64* buf, int* piv, i64* lam, i64* lams,
                     int* pos, int* tstar_out) noexcept nogil:
    cdef int i, j, k, t, q, u, c, nblock, nrows, width, npiv, nroots
    cdef int tstar = 0
    cdef i64 x, lx, acc, lu
    cdef bint nonzero = False
    tstar_out[0] = 0
    for i in range(ell * r):
        S[i] = 0
    for i in range(ell):
        for j in range(n):
            x = R[i * n + j]
            if x:
                lx = log[x]
                for k in range(r):
                    S[i * r + k] ^= exp[lx + logP[k * n + j]]
    for i in range(ell * r):
        if S[i]:
            nonzero = True
            break
    if not nonzero:
        return DECODED

    for t in range(1, t_max + 1):
        nblock = r - t
        if ell * nblock < t:
            break
        width = t + 1
        nrows = 0
        for i in range(ell):
            for q in range(nblock):
                for c in range(t):
                    buf[nrows * width + c] = S[i * r + q + c]
                buf[nrows * width + t] = S[i * r + t + q]
                nrows += 1
        npiv = _rref(buf, nrows, width, t + 1, exp, log, order, piv)
        if npiv > 0 and piv[npiv - 1] == t:
            continue
        if npiv < t:
            tstar_out[0] = t
            return NON_UNIQUE_SOLUTION
        tstar = t
        lam[0] = 1
        for u in range(1, t + 1):
            lam[u] = buf[(t - u) * width + t]
        break
    if tstar == 0:
        return NO_CONSISTENT_T
    tstar_out[0] = tstar

    for u in range(tstar + 1):
        lams[u] = log[lam[u]]
    nroots = 0
    for k in range(order):
        acc = 1
        for u in range(1, tstar + 1):
            lu = lams[u]
            if lu >= 0:
                acc ^= exp[(lu + u * k) % order]
        if acc == 0:
            if nroots < tstar:
                pos[nroots] = <int>root_pos[k]
            nroots += 1
    if nroots != tstar:
        return ROOT_COUNT_MISMATCH
    for u in range(tstar):
        if pos[u] < 0:
            return ROOT_NOT_A_LOCATOR

    width = tstar + ell
    for k in range(r):
        for u in range(tstar):
            buf[k * width + u] = exp[logP[k * n + pos[u]]]
        for i in range(ell):
            buf[k * width + tstar + i] = S[i * r + k]
    npiv = _rref(buf, r, width, tstar, exp, log, order, piv)
    if npiv < tstar:
        return NO_ERROR_VALUES
    for k in range(tstar, r):
        for c in range(tstar, width):
            if buf[k * width + c]:
                return NO_ERROR_VALUES
    for u in range(tstar):
        for i in range(ell):
            R[i * n + pos[u]] ^= buf[u * width + tstar + i]
    return DECODED


def decode_batch(R, P, root_pos, exp, log, i64 order, int t_max):
    cdef cnp.ndarray[i64, ndim=3, mode="c"] C = np.array(R, dtype=np.int64, order="C", copy=True)
    lg_np = np.ascontiguousarray(log, dtype=np.int64)
    cdef const i64[:, ::1] logP = np.ascontiguousarray(lg_np[np.asarray(P, dtype=np.int64)])
    cdef const i64[::1] rp = np.ascontiguousarray(root_pos, dtype=np.int64)
    cdef const i64[::1] e = np.ascontiguousarray(exp, dtype=np.int64)
    cdef const i64[::1] lg = lg_np
    cdef int B = C.shape[0], ell = C.shape[1], n = C.shape[2]
    cdef int r = logP.shape[0]
    status_np = np.zeros(B, dtype=np.int64)
    tstar_np = np.zeros(B, dtype=np.int64)
    cdef i64[::1] status = status_np
    cdef i64[::1] tstar = tstar_np
    cdef Py_ssize_t bufsize = max(ell * r * (r + 1), r * (r + ell), 1)
    cdef i64* S = <i64*>malloc(max(ell * r, 1) * sizeof(i64))
    cdef i64* buf = <i64*>malloc(bufsize * sizeof(i64))
    cdef int* piv = <int*>malloc((r + ell + 2) * sizeof(int))
    cdef i64* lam = <i64*>malloc((r + 2) * sizeof(i64))
    cdef i64* lams = <i64*>malloc((r + 2) * sizeof(i64))
    cdef int* pos = <int*>malloc((r + 2) * sizeof(int))
    cdef i64[:, :, ::1] Cv = C
    cdef i64* Cp
    cdef int b, ts
    if not (S and buf and piv and lam and lams and pos):
        free(S); free(buf); free(piv); free(lam); free(lams); free(pos)
        raise MemoryError()
    try:
        with nogil:
            for b in range(B):
                Cp = &Cv[b, 0, 0]
                status[b] = _decode_one(Cp, ell, n, &logP[0, 0], r, &rp[0], &e[0], &lg[0],
                                        order, t_max, S, buf, piv, lam, lams, pos, &ts)
                tstar[b] = ts
    finally:
        free(S); free(buf); free(piv); free(lam); free(lams); free(pos)
    return status_np, tstar_np, C
