"""Collaborative syndrome decoding of interleaved alternant codes.

``decode`` runs the algorithm step by step (syndromes, key equation, locator
roots, error values) and is the readable reference. ``decode_batch`` hands
many words to the compiled kernel; both must agree on every input.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .codes import AlternantCode
from .status import (
    DECODED,
    NO_CONSISTENT_T,
    NO_ERROR_VALUES,
    NON_UNIQUE_SOLUTION,
    NOT_IN_SUBFIELD,
    REASONS,
    ROOT_COUNT_MISMATCH,
    ROOT_NOT_A_LOCATOR,
)

SUCCESS = "Success"
MISCORRECTION = "Miscorrection"
FAILURE = "Failure"


@dataclass(frozen=True)
class DecodeOutcome:
    status: int
    t_star: int = 0
    C_hat: np.ndarray | None = None
    E_hat: np.ndarray | None = None

    @property
    def decoded(self) -> bool:
        return self.status == DECODED

    @property
    def reason(self) -> str | None:
        return None if self.decoded else REASONS[self.status]


def _matmul_T(F, A, B) -> np.ndarray:
    """A @ B.T over the big field, for int matrices A (a x n) and B (b x n)."""
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    prod = F.mul_arrays(A[:, None, :], B[None, :, :])
    return np.bitwise_xor.reduce(prod, axis=2) if A.shape[1] else np.zeros((len(A), len(B)), np.int64)


def syndromes(R, code: AlternantCode) -> np.ndarray:
    """ell x (d-1) syndrome sheet R * (H diag v)^T."""
    R = np.atleast_2d(np.asarray(R, dtype=np.int64))
    if R.shape[1] != code.n:
        raise ValueError(f"received word has length {R.shape[1]}, code has n={code.n}")
    return _matmul_T(code.field, R, code.P)


def key_system(S: np.ndarray, t: int) -> tuple[np.ndarray, np.ndarray]:
    """Stacked Hankel blocks (unknowns Lambda_t .. Lambda_1) and right-hand side."""
    ell, r = S.shape
    nb = r - t
    A = np.zeros((ell * nb, t), dtype=np.int64)
    b = np.zeros(ell * nb, dtype=np.int64)
    for i in range(ell):
        for row in range(nb):
            A[i * nb + row] = S[i, row:row + t]
            b[i * nb + row] = S[i, t + row]
    return A, b


def _rank(F, M: np.ndarray) -> int:
    if M.size == 0:
        return 0
    _, piv = kernels.rref(M, M.shape[1], F.exp, F.log, F.order)
    return len(piv)


def solve_locator(S: np.ndarray, code: AlternantCode, t_max: int):
    """Return (status, t_star, Lambda coefficients [1, L1, ..., Lt])."""
    F = code.field
    ell, r = S.shape
    for t in range(1, t_max + 1):
        if ell * (r - t) < t:
            break
        A, b = key_system(S, t)
        aug = np.concatenate([A, b[:, None]], axis=1)
        red, piv = kernels.rref(aug, t + 1, F.exp, F.log, F.order)
        if len(piv) and piv[-1] == t:
            continue
        if len(piv) < t:
            return NON_UNIQUE_SOLUTION, t, None
        # column c of the unknowns is Lambda_{t-c}
        lam = [1] + [int(red[t - u, t]) for u in range(1, t + 1)]
        return DECODED, t, lam
    return NO_CONSISTENT_T, 0, None


def locator_roots(lam, code: AlternantCode) -> tuple[list[int], list[int]]:
    """All roots of Lambda among nonzero field elements (as logs) and their positions."""
    F = code.field
    k = np.arange(F.order, dtype=np.int64)
    acc = np.zeros(F.order, dtype=np.int64)
    for u, c in enumerate(lam):
        if c:
            acc ^= F.exp[(F.log[c] + u * k) % F.order]
    roots = [int(x) for x in np.flatnonzero(acc == 0)]
    return roots, [int(code.root_pos[x]) for x in roots]


def error_values(positions, S: np.ndarray, code: AlternantCode) -> np.ndarray | None:
    """Solve sum_k e_{i,k} v_{j_k} alpha_{j_k}^r = S_{i,r+1} row by row; None if inconsistent."""
    F = code.field
    t = len(positions)
    ell, r = S.shape
    aug = np.concatenate([code.P[:, list(positions)], S.T], axis=1)
    red, piv = kernels.rref(aug, t, F.exp, F.log, F.order)
    if len(piv) < t or red[t:, t:].any():
        return None
    return red[:t, t:].T.copy()


def _poly_mul_trunc(F, a, b, size):
    out = [0] * size
    for i, x in enumerate(a):
        if x == 0 or i >= size:
            continue
        for j, y in enumerate(b):
            if i + j >= size:
                break
            out[i + j] ^= F.mul(x, y)
    return out


def forney_values(positions, lam, S: np.ndarray, code: AlternantCode) -> np.ndarray | None:
    """Error values from the error evaluator Omega = S(x) Lambda(x) mod x^(d-1).

    The result is checked against the syndromes; None if they disagree.
    """
    F = code.field
    ell, r = S.shape
    dlam = [lam[u] if u % 2 == 1 else 0 for u in range(1, len(lam))]
    E = np.zeros((ell, len(positions)), dtype=np.int64)
    for i in range(ell):
        omega = _poly_mul_trunc(F, [int(x) for x in S[i]], lam, r)
        for k, j in enumerate(positions):
            a = int(code.grs.alpha[j])
            ainv = F.inv(a)
            den = F.mul(int(code.grs.v[j]), F.eval_poly(dlam, ainv))
            if den == 0:
                return None
            E[i, k] = F.div(F.mul(a, F.eval_poly(omega, ainv)), den)
    check = _matmul_T(F, E, code.P[:, list(positions)])
    return E if np.array_equal(check, S) else None


def decode(R, code: AlternantCode, strict: bool = False, method: str = "linear") -> DecodeOutcome:
    """Decode one ell x n received word.

    ``method`` picks the error-value step: "linear" (row-wise linear solve)
    or "forney". With ``strict`` a result whose error values leave the
    subfield is reported as a failure.
    """
    R = np.atleast_2d(np.asarray(R, dtype=np.int64))
    ell = R.shape[0]
    S = syndromes(R, code)
    if not S.any():
        return DecodeOutcome(DECODED, 0, R.copy(), np.zeros_like(R))
    status, t_star, lam = solve_locator(S, code, code.t_max(ell))
    if status != DECODED:
        return DecodeOutcome(status, t_star)
    roots, positions = locator_roots(lam, code)
    if len(roots) != t_star:
        return DecodeOutcome(ROOT_COUNT_MISMATCH, t_star)
    if min(positions) < 0:
        return DecodeOutcome(ROOT_NOT_A_LOCATOR, t_star)
    if method == "forney":
        vals = forney_values(positions, lam, S, code)
    elif method == "linear":
        vals = error_values(positions, S, code)
    else:
        raise ValueError(f"unknown method {method!r}")
    if vals is None:
        return DecodeOutcome(NO_ERROR_VALUES, t_star)
    E_hat = np.zeros_like(R)
    E_hat[:, positions] = vals
    if strict and not code.field.subfield_mask()[E_hat].all():
        return DecodeOutcome(NOT_IN_SUBFIELD, t_star)
    return DecodeOutcome(DECODED, t_star, R ^ E_hat, E_hat)


def decode_batch(R, code: AlternantCode, strict: bool = False):
    """Decode a (B, ell, n) stack with the kernel backend.

    Returns (status, t_star, C_hat); C_hat equals R where decoding failed.
    """
    R = np.asarray(R, dtype=np.int64)
    F = code.field
    status, tstar, C = kernels.decode_batch(
        R, code.P, code.root_pos, F.exp, F.log, F.order, code.t_max(R.shape[1]))
    if strict:
        bad = ~F.subfield_mask()[C].all(axis=(1, 2)) & (status == DECODED)
        status = np.where(bad, NOT_IN_SUBFIELD, status)
        C = np.where(bad[:, None, None], R, C)
    return status, tstar, C


def classify(outcome: DecodeOutcome, C) -> str:
    if not outcome.decoded:
        return FAILURE
    return SUCCESS if np.array_equal(outcome.C_hat, np.asarray(C)) else MISCORRECTION


def _place(E, support, code: AlternantCode) -> np.ndarray:
    E = np.atleast_2d(np.asarray(E, dtype=np.int64))
    full = np.zeros((E.shape[0], code.n), dtype=np.int64)
    full[:, list(support)] = E
    return full


def rank_condition(E, support, code: AlternantCode, t: int) -> bool:
    """True iff the key matrix S(t) built from this error has rank below t."""
    S = syndromes(_place(E, support, code), code)
    A, _ = key_system(S, t)
    return _rank(code.field, A) < t


def crux_condition(E, support, code: AlternantCode, t: int) -> bool:
    """True iff some nonzero v satisfies H_{d-t} diag(v) E^T = 0 on the support.

    The condition is linear in v: rows (i, r) of the coefficient matrix hold
    alpha_j^r * E[i, j] for r < d - t - 1.
    """
    F = code.field
    E = np.atleast_2d(np.asarray(E, dtype=np.int64))
    nr = code.d - t - 1
    if nr <= 0:
        return True
    alpha = np.array([code.grs.alpha[j] for j in support], dtype=np.int64)
    powers = F.exp[(np.arange(nr)[:, None] * F.log[alpha][None, :]) % F.order]
    K = F.mul_arrays(E[:, None, :], powers[None, :, :]).reshape(-1, len(support))
    return _rank(F, K) < t
