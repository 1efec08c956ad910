"""Pure-Python kernels: GF(2^N) row reduction and the batch decoder.

This module is the reference implementation; ``_ckernels.pyx`` mirrors it
line for line and must return identical results.
"""

import numpy as np

from .status import (
    DECODED,
    NO_CONSISTENT_T,
    NO_ERROR_VALUES,
    NON_UNIQUE_SOLUTION,
    ROOT_COUNT_MISMATCH,
    ROOT_NOT_A_LOCATOR,
)

BACKEND = "python"


def _rref_rows(rows, pivot_cols, exp, log, order):
    """Reduce ``rows`` (list of lists) in place; return the pivot columns.

    Pivots are searched only in the first ``pivot_cols`` columns, but row
    operations span the full width (augmented columns ride along).
    """
    nrows = len(rows)
    pivots = []
    r = 0
    for c in range(pivot_cols):
        if r == nrows:
            break
        p = r
        while p < nrows and rows[p][c] == 0:
            p += 1
        if p == nrows:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        width = len(prow)
        linv = (order - log[prow[c]]) % order
        if linv:
            for k in range(c, width):
                x = prow[k]
                if x:
                    prow[k] = exp[log[x] + linv]
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            f = row[c]
            if f:
                lf = log[f]
                for k in range(c, width):
                    x = prow[k]
                    if x:
                        row[k] ^= exp[lf + log[x]]
        pivots.append(c)
        r += 1
    return pivots


def rref(M, pivot_cols, exp, log, order):
    """Reduced row echelon form of an int64 matrix over GF(2^N)."""
    rows = np.asarray(M, dtype=np.int64).tolist()
    pivots = _rref_rows(rows, pivot_cols, exp.tolist(), log.tolist(), order)
    out = np.array(rows, dtype=np.int64).reshape(np.shape(M))
    return out, np.array(pivots, dtype=np.int64)


def encode_batch(msg, G, exp, log, order):
    """Rows of ``msg`` (B, ell, k) times ``G`` (k, n) over GF(2^N)."""
    msg = np.asarray(msg, dtype=np.int64)
    G = np.asarray(G, dtype=np.int64)
    B, ell, k = msg.shape
    out = np.zeros((B, ell, G.shape[1]), dtype=np.int64)
    logG = log[G]
    for j in range(k):
        a = msg[:, :, j:j + 1]
        prod = exp[np.maximum(log[a], 0) + np.maximum(logG[j], 0)]
        prod = np.where((a == 0) | (G[j] == 0), 0, prod)
        out ^= prod
    return out


def _decode_one(R, logP, root_pos, exp, log, order, t_max):
    ell = len(R)
    n = len(R[0])
    r = len(logP)  # d - 1
    S = []
    nonzero = False
    for i in range(ell):
        Ri = R[i]
        Si = [0] * r
        for j in range(n):
            x = Ri[j]
            if x:
                lx = log[x]
                for k in range(r):
                    Si[k] ^= exp[lx + logP[k][j]]
        S.append(Si)
        if any(Si):
            nonzero = True
    if not nonzero:
        return DECODED, 0, None

    tstar = 0
    lam = None
    for t in range(1, t_max + 1):
        nblock = r - t
        if ell * nblock < t:
            break
        rows = []
        for i in range(ell):
            Si = S[i]
            for q in range(nblock):
                rows.append(Si[q:q + t] + [Si[t + q]])
        pivots = _rref_rows(rows, t + 1, exp, log, order)
        if pivots and pivots[-1] == t:
            continue
        if len(pivots) < t:
            return NON_UNIQUE_SOLUTION, t, None
        tstar = t
        # unknown c holds Lambda_{t-c}
        lam = [1] + [rows[t - u][t] for u in range(1, t + 1)]
        break
    if tstar == 0:
        return NO_CONSISTENT_T, 0, None

    logs = [log[c] for c in lam]
    roots = []
    for k in range(order):
        acc = 1
        for u in range(1, tstar + 1):
            lu = logs[u]
            if lu >= 0:
                acc ^= exp[(lu + u * k) % order]
        if acc == 0:
            roots.append(k)
    if len(roots) != tstar:
        return ROOT_COUNT_MISMATCH, tstar, None
    positions = [root_pos[k] for k in roots]
    if min(positions) < 0:
        return ROOT_NOT_A_LOCATOR, tstar, None

    rows = []
    for k in range(r):
        rows.append([exp[logP[k][j]] for j in positions] + [S[i][k] for i in range(ell)])
    pivots = _rref_rows(rows, tstar, exp, log, order)
    if len(pivots) < tstar:
        return NO_ERROR_VALUES, tstar, None
    for k in range(tstar, r):
        if any(rows[k][tstar:]):
            return NO_ERROR_VALUES, tstar, None
    C = [list(Ri) for Ri in R]
    for u, j in enumerate(positions):
        for i in range(ell):
            C[i][j] ^= rows[u][tstar + i]
    return DECODED, tstar, C


def decode_batch(R, P, root_pos, exp, log, order, t_max):
    """Decode a batch of received words.

    ``R`` is (B, ell, n); ``P`` is the (d-1, n) GRS parity matrix H*diag(v)
    with nonzero entries; ``root_pos[k]`` is the position j whose locator
    satisfies alpha_j^{-1} = g^k, or -1. Returns (status, tstar, C_hat).
    """
    R = np.asarray(R, dtype=np.int64)
    B = R.shape[0]
    logP = np.asarray(log[np.asarray(P, dtype=np.int64)]).tolist()
    exp_l = exp.tolist()
    log_l = log.tolist()
    rp = np.asarray(root_pos).tolist()
    status = np.zeros(B, dtype=np.int64)
    tstar = np.zeros(B, dtype=np.int64)
    C_out = R.copy()
    for b in range(B):
        st, ts, C = _decode_one(R[b].tolist(), logP, rp, exp_l, log_l, order, t_max)
        status[b] = st
        tstar[b] = ts
        if C is not None:
            C_out[b] = C
    return status, tstar, C_out
