"""Closed-form bounds on the probability of unsuccessful decoding.

Every bound is evaluated as an exact ``Fraction``. Values are stored as the
probability of *unsuccessful* decoding (1 - P_suc), except the miscorrection
bound which is P_misc itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .counting import (
    b_sum,
    b_total,
    bad_matrix_count,
    binom,
    k_opt,
    maximize_convex_sum,
    rank_count_no_zero_cols,
)

ZERO = Fraction(0)
ONE = Fraction(1)


def exact_log10(x: Fraction) -> float:
    if x <= 0:
        return -math.inf
    return math.log10(x.numerator) - math.log10(x.denominator)


@dataclass(frozen=True)
class BoundValue:
    kind: str
    p_exact: Fraction | None
    log10: float
    asymptotic: bool = False

    @property
    def applicable(self) -> bool:
        return self.p_exact is not None

    @classmethod
    def of(cls, kind: str, raw: Fraction, asymptotic: bool = False) -> "BoundValue":
        """Clamp ``raw`` into [0, 1]; log10 keeps the unclamped magnitude."""
        raw = Fraction(raw)
        return cls(kind, min(max(raw, ZERO), ONE), exact_log10(raw), asymptotic)

    @classmethod
    def missing(cls, kind: str) -> "BoundValue":
        return cls(kind, None, math.nan)


@dataclass(frozen=True)
class CodeParams:
    q: int
    m: int
    d: int
    ell: int
    t: int
    n: int | None = None

    def __post_init__(self):
        if self.n is None:
            object.__setattr__(self, "n", self.q**self.m - 1)
        if self.q < 2 or self.m < 1 or self.ell < 1 or self.t < 0:
            raise ValueError(f"invalid parameters {self}")
        if not 2 <= self.d <= self.n:
            raise ValueError(f"need 2 <= d <= n, got d={self.d}, n={self.n}")
        if self.t > self.n:
            raise ValueError(f"t={self.t} exceeds n={self.n}")

    @property
    def t_max(self) -> int:
        return self.ell * (self.d - 1) // (self.ell + 1)


def lb_rs(p: CodeParams) -> BoundValue:
    """Unsuccess bound for interleaved GRS codes with errors over the big field."""
    Q = p.q**p.m
    Ql = Q**p.ell
    base = (Ql - Fraction(1, Q)) / (Ql - 1)
    expo = -p.m * (p.ell * (p.d - 1) - (p.ell + 1) * p.t)
    return BoundValue.of("RS", base**p.t * Fraction(p.q) ** expo / (Q - 1))


def _a_w(p: CodeParams, w: int) -> int:
    e = w - (p.d - p.t - 1) * p.m
    return p.q**e if e > 0 else 1


def _b_w(p: CodeParams, w: int, kopt: str) -> int:
    delta = p.d - p.t
    if kopt == "singleton":
        return p.q ** (w - delta + 1)
    if kopt == "full":
        return p.q ** k_opt(p.q, w, delta)
    raise ValueError(f"unknown kopt mode {kopt!r}")


def _alternant_sum(p: CodeParams, kopt: str, literal: bool, simple: bool) -> Fraction:
    q, ell, t = p.q, p.ell, p.t
    delta = p.d - t
    Q = q**p.m
    ql1 = q**ell - 1
    total = ZERO
    for w in range(delta, t + 1):
        c = (Q - 1) ** w
        a = _a_w(p, w)
        b = _b_w(p, w, kopt)
        Bw = b_total(w, delta, q, p.m)
        inner = -c + maximize_convex_sum(a, b, c, Bw, ell, literal)
        if not simple:
            inner += Fraction(ql1, q - 1) * (c + b_sum(w, delta, w, q, p.m) - Bw)
        total += Fraction(binom(t, w), (Q - 1) * ql1**w) * inner
    return total


def lb_alternant(p: CodeParams, kopt: str = "full", literal: bool = False) -> BoundValue:
    """Unsuccess bound for interleaved alternant codes.

    ``kopt="singleton"`` replaces the dimension bound by the Singleton bound.
    An empty range of weights (t < d - t) gives 0.
    """
    kind = "Thm1" if kopt == "full" else "WoKopt"
    if p.d - p.t < 1:
        return BoundValue.of(kind, ONE)
    return BoundValue.of(kind, _alternant_sum(p, kopt, literal, simple=False))


def lb_alternant_simple(p: CodeParams, literal: bool = False) -> BoundValue:
    """Looser variant that drops the full-weight correction term."""
    if p.d - p.t < 1:
        return BoundValue.of("L01", ONE)
    return BoundValue.of("L01", _alternant_sum(p, "full", literal, simple=True))


def success_rank_fraction(q: int, ell: int, t: int, d: int) -> Fraction:
    """Fraction of no-zero-column ell x t matrices with rank >= 2t - d + 2."""
    lo = max(0, 2 * t - d + 2)
    good = sum(rank_count_no_zero_cols(ell, t, s, q) for s in range(lo, t + 1))
    return Fraction(good, (q**ell - 1) ** t)


def lb_high_order(p: CodeParams) -> BoundValue:
    """Unsuccess bound from the rank condition; only defined for ell >= t."""
    if p.ell < p.t:
        return BoundValue.missing("LargeEll")
    return BoundValue.of("LargeEll", 1 - success_rank_fraction(p.q, p.ell, p.t, p.d))


def ub_success(p: CodeParams, literal: bool = False) -> BoundValue:
    """Lower bound on 1 - P_suc from errors with d - t projectively equal columns."""
    lo = max(1, p.d - p.t)
    if lo > p.t:
        return BoundValue.of("LowerIE", ZERO)
    best = max(bad_matrix_count(p.q, p.ell, p.t, xi, literal) for xi in range(lo, p.t + 1))
    return BoundValue.of("LowerIE", Fraction(best, (p.q**p.ell - 1) ** p.t))


@lru_cache(maxsize=None)
def _johnson_rec(n: int, d: int, w: int, Q: int, step: int) -> int:
    """Johnson value when its denominator is positive, else shorten one coordinate."""
    if w == 0:
        return 1
    # theta_Q d n / (w^2 - theta_Q n (2w - d)), scaled by Q
    denom = Q * w * w - (Q - 1) * n * (2 * w - d)
    if denom > 0:
        return (Q - 1) * d * n // denom
    return n * step * _johnson_rec(n - 1, d, w - 1, Q, step) // w


def weight_enum_bound(n: int, d: int, w: int, Q: int, qary: bool = False) -> int:
    """Code-independent estimate of A_w for a linear [n, ., d] code over GF(Q).

    The default shortening step n/w is the binary one, applied as is to
    alphabet size Q. For Q > 2 it can undercount (an MDS
    code has A_d = C(n, d)(Q-1)); ``qary=True`` uses the step n(Q-1)/w,
    which is a true upper bound for every Q.
    """
    if w == 0:
        return 1
    if w < d:
        return 0
    return _johnson_rec(n, d, w, Q, Q - 1 if qary else 1)


def misc_u(Q: int, n: int, t: int, w: int, rho: int) -> int:
    """Weight-t words over GF(Q) at distance rho from a fixed weight-w word."""
    total = 0
    top = t + w - rho
    for i in range((top + 1) // 2, top + 1):
        j = rho - (t + w) + 2 * i
        if i > w or i > t or j < 0 or j > i:
            continue
        total += binom(w, i) * binom(i, j) * binom(n - w, t - i) * (Q - 2) ** j * (Q - 1) ** (t - i)
    return total


def misc_bound(p: CodeParams, qary: bool = False) -> BoundValue:
    """Miscorrection bound for decoder radius floor(ell(d-1)/(ell+1)).

    ``qary`` selects the weight estimate, see ``weight_enum_bound``.
    """
    if p.t == 0:
        return BoundValue.of("Miscorrection", ZERO)
    Q = p.q**p.ell
    tm = p.t_max
    num = 0
    for w in range(p.d, min(p.n, p.t + tm) + 1):
        A = weight_enum_bound(p.n, p.d, w, Q, qary)
        if A:
            num += A * sum(misc_u(Q, p.n, p.t, w, rho) for rho in range(min(p.t, tm) + 1))
    return BoundValue.of("Miscorrection", Fraction(num, binom(p.n, p.t) * (Q - 1) ** p.t))


def asymptotic_high_order(p: CodeParams) -> BoundValue:
    """Leading term q^-((ell+d-1-2t)(d-1-t)) of the large-ell unsuccess probability."""
    if p.ell < p.t:
        return BoundValue.missing("Asymptotic")
    e = (p.ell + p.d - 1 - 2 * p.t) * (p.d - 1 - p.t)
    return BoundValue.of("Asymptotic", Fraction(p.q) ** (-e), asymptotic=True)


def all_bounds(p: CodeParams, literal: bool = False, qary: bool = False) -> dict[str, BoundValue]:
    """Every table column for one parameter set, keyed by column name."""
    out = [
        lb_rs(p),
        lb_alternant(p, "full", literal),
        lb_alternant(p, "singleton", literal),
        lb_alternant_simple(p, literal),
        lb_high_order(p),
        ub_success(p),
        misc_bound(p, qary),
    ]
    return {b.kind: b for b in out}


def format_exact(x: Fraction | None, digits: int = 6) -> str:
    """Scientific notation with ``digits`` significant digits, computed exactly.

    Works far below the double-precision range; ``None`` renders as ``nan``.
    """
    if x is None:
        return "nan"
    if x == 0:
        return f"{0:.{digits - 1}e}"
    if x < 0:
        return "-" + format_exact(-x, digits)
    num, den = x.numerator, x.denominator
    e = len(str(num)) - len(str(den))
    # settle 10^e <= x < 10^(e+1)
    while _ge_pow10(num, den, e + 1):
        e += 1
    while not _ge_pow10(num, den, e):
        e -= 1
    shift = digits - 1 - e
    if shift >= 0:
        n2, d2 = num * 10**shift, den
    else:
        n2, d2 = num, den * 10 ** (-shift)
    mant, rem = divmod(n2, d2)
    if 2 * rem >= d2:
        mant += 1
    if mant >= 10**digits:
        mant //= 10
        e += 1
    s = str(mant)
    return f"{s[0]}.{s[1:]}e{e:+03d}"


def _ge_pow10(num: int, den: int, e: int) -> bool:
    if e >= 0:
        return num >= den * 10**e
    return num * 10 ** (-e) >= den
