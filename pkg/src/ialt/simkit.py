"""Monte Carlo estimation of decoding success, failure and miscorrection rates.

Trials are generated in fixed-size chunks. Chunk ``c`` of a run at ``t``
errors draws from ``np.random.default_rng([seed, t, c])``, so the result
depends only on the configuration and never on how many workers ran it.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .codes import AlternantCode
from .decoder import decode_batch
from .gf2m import subfield_elements
from .status import DECODED, REASONS

CHUNK = 2048


def sample_errors(rng: np.random.Generator, batch: int, ell: int, t: int, n: int, subfield):
    """Draw ``batch`` errors uniformly: a t-subset of [n] and an ell x t matrix without zero columns.

    Returns (supports, E) with shapes (batch, t) and (batch, ell, t).
    """
    sub = np.asarray(subfield, dtype=np.int64)
    q = len(sub)
    if t > n:
        raise ValueError(f"cannot place t={t} errors in length {n}")
    keys = rng.random((batch, n))
    supports = np.sort(np.argsort(keys, axis=1)[:, :t], axis=1)
    cols = rng.integers(1, q**ell, size=(batch, t))
    digits = (cols[:, None, :] // q ** np.arange(ell)[None, :, None]) % q
    return supports, sub[digits]


def sample_error(ell: int, t: int, n: int, subfield, rng: np.random.Generator):
    supports, E = sample_errors(rng, 1, ell, t, n, subfield)
    return supports[0], E[0]


def place_errors(supports: np.ndarray, E: np.ndarray, n: int) -> np.ndarray:
    B, ell, t = E.shape
    full = np.zeros((B, ell, n), dtype=np.int64)
    rows = np.arange(B)[:, None, None]
    full[rows, np.arange(ell)[None, :, None], supports[:, None, :]] = E
    return full


def sample_trials(code: AlternantCode, ell: int, t: int, batch: int, rng, codeword_mode: str = "random"):
    """One batch of (C, supports, E, R); the error is drawn before the codeword."""
    F = code.field
    sub = subfield_elements(F)
    supports, E = sample_errors(rng, batch, ell, t, code.n, sub)
    if codeword_mode == "random":
        msg = np.asarray(sub, dtype=np.int64)[rng.integers(0, len(sub), size=(batch, ell, code.k))]
        C = kernels.encode_batch(msg, code.generator, F.exp, F.log, F.order)
    elif codeword_mode == "zero":
        C = np.zeros((batch, ell, code.n), dtype=np.int64)
    else:
        raise ValueError(f"unknown codeword mode {codeword_mode!r}")
    R = C ^ place_errors(supports, E, code.n)
    return C, supports, E, R


@dataclass(frozen=True)
class TrialConfig:
    code: AlternantCode
    ell: int
    t: int
    trials: int
    seed: int = 0
    codeword_mode: str = "random"
    strict: bool = False

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be positive")
        if not 0 <= self.t <= self.code.n:
            raise ValueError(f"need 0 <= t <= n={self.code.n}")


@dataclass
class TrialStats:
    successes: int = 0
    miscorrections: int = 0
    failures: int = 0
    reasons: dict = field(default_factory=dict)

    @property
    def trials(self) -> int:
        return self.successes + self.miscorrections + self.failures

    @property
    def success_rate(self) -> float:
        return self.successes / self.trials if self.trials else math.nan

    def merge(self, other: "TrialStats") -> "TrialStats":
        reasons = dict(self.reasons)
        for k, v in other.reasons.items():
            reasons[k] = reasons.get(k, 0) + v
        return TrialStats(
            self.successes + other.successes,
            self.miscorrections + other.miscorrections,
            self.failures + other.failures,
            dict(sorted(reasons.items())),
        )


def wilson_ci95(k: int, n: int) -> tuple[float, float]:
    if n == 0:
        return (math.nan, math.nan)
    z = 1.959963984540054
    p = k / n
    den = 1 + z * z / n
    mid = (p + z * z / (2 * n)) / den
    half = z * math.sqrt(p * (1 - p) / n + z * z / (4 * n * n)) / den
    return (max(0.0, mid - half), min(1.0, mid + half))


def _chunk_stats(cfg: TrialConfig, chunk: int, size: int) -> TrialStats:
    rng = np.random.default_rng([cfg.seed, cfg.t, chunk])
    C, _, _, R = sample_trials(cfg.code, cfg.ell, cfg.t, size, rng, cfg.codeword_mode)
    status, _, C_hat = decode_batch(R, cfg.code, strict=cfg.strict)
    ok = status == DECODED
    same = (C_hat == C).all(axis=(1, 2))
    counts = np.bincount(status, minlength=len(REASONS) + 1)
    reasons = {REASONS[s]: int(c) for s, c in enumerate(counts) if s != DECODED and c}
    return TrialStats(int((ok & same).sum()), int((ok & ~same).sum()), int((~ok).sum()), reasons)


def _chunks(trials: int, size: int):
    return [(c, min(size, trials - c * size)) for c in range((trials + size - 1) // size)]


_WORKER_CFG: TrialConfig | None = None


def _init_worker(cfg):
    global _WORKER_CFG
    _WORKER_CFG = cfg


def _worker(job):
    return _chunk_stats(_WORKER_CFG, *job)


def run_trials(cfg: TrialConfig, workers: int = 1, chunk_size: int = CHUNK) -> TrialStats:
    """Encode, corrupt, decode and classify ``cfg.trials`` words."""
    jobs = _chunks(cfg.trials, chunk_size)
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(workers, initializer=_init_worker, initargs=(cfg,)) as pool:
            parts = list(pool.map(_worker, jobs))
    else:
        parts = [_chunk_stats(cfg, *job) for job in jobs]
    total = TrialStats()
    for p in parts:
        total = total.merge(p)
    return total


def find_threshold(code: AlternantCode, ell: int, trials: int = 100, target: float = 0.9,
                   seed: int = 0, workers: int = 1) -> int:
    """Largest t such that every t' <= t succeeds in more than ``target`` of the trials.

    The scan starts at floor((d-1)/2) and stops at the first t that misses.
    """
    t = (code.d - 1) // 2
    while t <= code.n:
        stats = run_trials(TrialConfig(code, ell, t, trials, seed), workers=workers)
        if not stats.successes > target * trials:
            return t - 1
        t += 1
    return code.n
