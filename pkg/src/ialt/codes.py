"""GRS codes, their subfield subcodes (alternant codes) and interleaved words."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import kernels
from .counting import k_opt
from .gf2m import FieldTower, build_field


class CodeError(ValueError):
    pass


def log2_exact(q: int) -> int:
    """s with q == 2**s; rejects anything that is not a power of two."""
    if q < 2 or q & (q - 1):
        raise CodeError(f"q={q} is not a power of 2")
    return q.bit_length() - 1


@dataclass(frozen=True, eq=False)
class GrsParams:
    """Locators ``alpha`` and column multipliers ``v`` of a GRS code with designed distance ``d``."""

    field: FieldTower
    n: int
    d: int
    alpha: tuple
    v: tuple

    def __post_init__(self):
        F = self.field
        if not 1 <= self.n <= F.order:
            raise CodeError(f"need 1 <= n <= {F.order}, got n={self.n}")
        if not 2 <= self.d <= self.n:
            raise CodeError(f"need 2 <= d <= n, got d={self.d}, n={self.n}")
        if len(self.alpha) != self.n or len(self.v) != self.n:
            raise CodeError("alpha and v must both have length n")
        if any(not 0 < a < F.size for a in self.alpha):
            raise CodeError("locators must be nonzero field elements")
        if len(set(self.alpha)) != self.n:
            raise CodeError("locators must be distinct")
        if any(not 0 < x < F.size for x in self.v):
            raise CodeError("multipliers must be nonzero field elements")

    @classmethod
    def default(cls, F: FieldTower, d: int, n: int | None = None, v=None) -> "GrsParams":
        """alpha_j = g**j for j < n (all nonzero elements when n is full length)."""
        n = F.order if n is None else n
        alpha = tuple(int(F.exp[j]) for j in range(n))
        v = (1,) * n if v is None else tuple(int(x) for x in v)
        return cls(F, n, d, alpha, v)

    @classmethod
    def random_multipliers(cls, F: FieldTower, d: int, seed: int, n: int | None = None) -> "GrsParams":
        n = F.order if n is None else n
        rng = np.random.default_rng(seed)
        v = rng.integers(1, F.size, size=n)
        return cls.default(F, d, n, v)


def grs_parity_matrix(grs: GrsParams) -> np.ndarray:
    """(d-1) x n matrix whose row j holds v_i * alpha_i**j."""
    F = grs.field
    la = F.log[np.array(grs.alpha, dtype=np.int64)]
    lv = F.log[np.array(grs.v, dtype=np.int64)]
    rows = np.arange(grs.d - 1, dtype=np.int64)[:, None]
    return F.exp[(lv[None, :] + rows * la[None, :]) % F.order].astype(np.int64)


# GF(2) helpers on ints used as bit vectors


def _bits_rank_inverse(cols: list[int], nbits: int):
    """Invert the nbits x nbits GF(2) matrix whose j-th column is ``cols[j]``.

    Returns the rows of the inverse as int bitmasks, or None if singular.
    """
    rows = []
    for k in range(nbits):
        r = 0
        for j, c in enumerate(cols):
            if c >> k & 1:
                r |= 1 << j
        rows.append([r, 1 << k])
    for c in range(nbits):
        p = next((i for i in range(c, nbits) if rows[i][0] >> c & 1), None)
        if p is None:
            return None
        rows[c], rows[p] = rows[p], rows[c]
        for i in range(nbits):
            if i != c and rows[i][0] >> c & 1:
                rows[i][0] ^= rows[c][0]
                rows[i][1] ^= rows[c][1]
    return [r[1] for r in rows]


def _parity_bits(x: np.ndarray) -> np.ndarray:
    x = x.copy()
    for sh in (32, 16, 8, 4, 2, 1):
        x ^= x >> sh
    return x & 1


def _rref_gf2(rows: list[int], ncols: int) -> tuple[list[int], list[int]]:
    """RREF of GF(2) row bitmasks (bit j = column j). Returns (rows, pivots)."""
    rows = [r for r in rows if r]
    out, pivots = [], []
    for c in range(ncols):
        bit = 1 << c
        p = next((i for i, r in enumerate(rows) if r & bit), None)
        if p is None:
            continue
        prow = rows.pop(p)
        rows = [r ^ prow if r & bit else r for r in rows]
        out = [r ^ prow if r & bit else r for r in out]
        out.append(prow)
        pivots.append(c)
    return out, pivots


def _to_bitmasks(M: np.ndarray) -> list[int]:
    packed = np.packbits(M.astype(np.uint8), axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def _from_bitmasks(rows: list[int], ncols: int) -> np.ndarray:
    nbytes = (ncols + 7) // 8
    buf = np.frombuffer(b"".join(r.to_bytes(nbytes, "little") for r in rows), dtype=np.uint8)
    bits = np.unpackbits(buf.reshape(len(rows), nbytes), axis=1, bitorder="little")
    return bits[:, :ncols].astype(np.int64)


def _nullspace_rref(H: np.ndarray, F: FieldTower) -> tuple[int, np.ndarray]:
    """(rank of H, RREF basis of its right kernel) over the subfield of F."""
    n = H.shape[1]
    if F.q == 2:
        rows, pivots = _rref_gf2(_to_bitmasks(H), n)
        by_pivot = dict(zip(pivots, rows))
        free = [c for c in range(n) if c not in by_pivot]
        kern = []
        for f in free:
            vec = 1 << f
            for p, r in by_pivot.items():
                if r >> f & 1:
                    vec |= 1 << p
            kern.append(vec)
        kern, _ = _rref_gf2(kern, n)
        G = _from_bitmasks(kern, n) if kern else np.zeros((0, n), dtype=np.int64)
        return len(pivots), G
    R, piv = kernels.rref(H, n, F.exp, F.log, F.order)
    piv = [int(p) for p in piv]
    free = [c for c in range(n) if c not in set(piv)]
    G = np.zeros((len(free), n), dtype=np.int64)
    for i, f in enumerate(free):
        G[i, f] = 1
        for r, p in enumerate(piv):
            G[i, p] = R[r, f]
    if len(free):
        G, _ = kernels.rref(G, n, F.exp, F.log, F.order)
    return len(piv), G


@dataclass(frozen=True, eq=False)
class AlternantCode:
    """Subfield subcode of a GRS code, with its expanded parity check and generator."""

    grs: GrsParams
    basis: tuple
    parity_q: np.ndarray = field(repr=False)
    k: int
    generator: np.ndarray = field(repr=False)

    @property
    def field(self) -> FieldTower:
        return self.grs.field

    @property
    def n(self) -> int:
        return self.grs.n

    @property
    def d(self) -> int:
        return self.grs.d

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def m(self) -> int:
        return self.field.m

    @cached_property
    def P(self) -> np.ndarray:
        """The GRS parity matrix H * diag(v)."""
        return grs_parity_matrix(self.grs)

    @cached_property
    def root_pos(self) -> np.ndarray:
        """root_pos[k] = j if alpha_j**-1 == g**k, else -1."""
        F = self.field
        pos = np.full(F.order, -1, dtype=np.int64)
        la = F.log[np.array(self.grs.alpha, dtype=np.int64)]
        pos[(-la) % F.order] = np.arange(self.n)
        return pos

    def t_max(self, ell: int) -> int:
        return ell * (self.d - 1) // (ell + 1)


def _coordinate_rows(F: FieldTower, basis: list[int]) -> list[int] | None:
    beta = [int(F.exp[F.subfield_step * u]) for u in range(F.s)]
    cols = [F.mul(b, g) for g in basis for b in beta]
    return _bits_rank_inverse(cols, F.degree)


def expansion_basis(F: FieldTower, seed: int = 0) -> tuple[tuple[int, ...], list[int]]:
    """A basis of GF(q^m) over GF(q) and the GF(2) inverse used for coordinates.

    Tries the powers of the primitive element first, then random candidates.
    """
    basis = [int(F.exp[i]) for i in range(F.m)]
    inv = _coordinate_rows(F, basis)
    rng = np.random.default_rng(seed)
    while inv is None:  # pragma: no cover - powers of g are always independent
        basis = [int(x) for x in rng.integers(1, F.size, size=F.m)]
        inv = _coordinate_rows(F, basis)
    return tuple(basis), inv


def expand_over_subfield(M: np.ndarray, F: FieldTower, inv: list[int]) -> np.ndarray:
    """Replace each entry by its m coordinates over GF(q): row k -> rows k*m .. k*m+m-1."""
    M = np.asarray(M, dtype=np.int64)
    s, m = F.s, F.m
    beta = np.array([int(F.exp[F.subfield_step * u]) for u in range(s)], dtype=np.int64)
    out = np.zeros((M.shape[0], m, M.shape[1]), dtype=np.int64)
    for i in range(m):
        for u in range(s):
            bit = _parity_bits(M & inv[i * s + u])
            out[:, i, :] ^= bit * beta[u]
    return out.reshape(M.shape[0] * m, M.shape[1])


def alternant_expand(grs: GrsParams) -> AlternantCode:
    F = grs.field
    basis, inv = expansion_basis(F)
    Hq = expand_over_subfield(grs_parity_matrix(grs), F, inv)
    rank, G = _nullspace_rref(Hq, F)
    Hq.setflags(write=False)
    G.setflags(write=False)
    return AlternantCode(grs=grs, basis=basis, parity_q=Hq, k=grs.n - rank, generator=G)


def build_code(q: int, m: int, d: int, n: int | None = None, v_seed: int | None = None) -> AlternantCode:
    """Alternant code over GF(q) from GF(q^m) with v = 1, or random v if ``v_seed`` is given."""
    F = build_field(log2_exact(q), m)
    if v_seed is None:
        grs = GrsParams.default(F, d, n)
    else:
        grs = GrsParams.random_multipliers(F, d, v_seed, n)
    return alternant_expand(grs)


def encode(code: AlternantCode, messages) -> np.ndarray:
    """Encode ell message rows (ell x k) into an ell x n interleaved codeword."""
    msg = np.asarray(messages, dtype=np.int64)
    if msg.ndim != 2 or msg.shape[1] != code.k:
        raise CodeError(f"messages must have shape (ell, {code.k}), got {msg.shape}")
    F = code.field
    return kernels.encode_batch(msg[None], code.generator, F.exp, F.log, F.order)[0]


def in_subfield(code: AlternantCode, M) -> bool:
    return bool(code.field.subfield_mask()[np.asarray(M, dtype=np.int64)].all())


def dimension_bounds(n: int, d: int, q: int, m: int) -> tuple[int, int]:
    return max(n - m * (d - 1), 0), min(n - d + 1, k_opt(q, n, d))


def codeinfo(code: AlternantCode, ell: int) -> dict:
    lo, hi = dimension_bounds(code.n, code.d, code.q, code.m)
    return {
        "q": code.q,
        "m": code.m,
        "n": code.n,
        "d": code.d,
        "ell": ell,
        "k_A": code.k,
        "k_lower": lo,
        "k_upper": hi,
        "t_max": code.t_max(ell),
    }
