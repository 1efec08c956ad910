"""Exact combinatorial counts behind the success-probability bounds.

Everything here is integer or ``Fraction`` arithmetic; nothing rounds.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, prod


def binom(n: int, k: int) -> int:
    """Binomial coefficient that is zero outside ``0 <= k <= n``."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def _exact_div(a: int, b: int) -> int:
    qt, rem = divmod(a, b)
    assert rem == 0, f"{a} not divisible by {b}"
    return qt


# weight enumerators


@lru_cache(maxsize=None)
def mds_weight_enum(n: int, d: int, w: int, Q: int) -> int:
    """Number of weight-``w`` codewords of an [n, n-d+1, d] MDS code over GF(Q)."""
    if not (1 <= d <= n + 1 and 0 <= w <= n and Q >= 2):
        raise ValueError(f"invalid MDS parameters n={n} d={d} w={w} Q={Q}")
    if w == 0:
        return 1
    total = sum((-1) ** j * comb(w, j) * (Q ** (w - d + 1 - j) - 1) for j in range(w - d + 1))
    return comb(n, w) * total


def b_sum(n: int, d: int, w: int, q: int, m: int) -> int:
    """Subfield codewords of weight ``w``, summed over all column multipliers."""
    Q = q**m
    return mds_weight_enum(n, d, w, Q) * (Q - 1) ** (n - w) * (q - 1) ** w


@lru_cache(maxsize=None)
def b_total(n: int, d: int, q: int, m: int) -> int:
    return sum(b_sum(n, d, w, q, m) for w in range(n + 1))


# dimension upper bounds for q-ary linear codes


def _largest_power_at_most(q: int, bound: Fraction) -> int:
    """Largest k with q**k <= bound (bound >= 1)."""
    k = 0
    p = q
    while p <= bound:
        k += 1
        p *= q
    return k


def ball_volume(q: int, n: int, r: int) -> int:
    return sum(comb(n, i) * (q - 1) ** i for i in range(r + 1))


def singleton_k(q: int, n: int, d: int) -> int:
    return n - d + 1


def griesmer_k(q: int, n: int, d: int) -> int:
    k, total = 0, 0
    while True:
        total += -(-d // q**k)
        if total > n:
            return k
        k += 1


def hamming_k(q: int, n: int, d: int) -> int:
    return _largest_power_at_most(q, Fraction(q**n, ball_volume(q, n, (d - 1) // 2)))


def plotkin_k(q: int, n: int, d: int) -> int | None:
    """Plotkin bound, shortened down to the length where ``d > theta*n`` holds."""
    # theta*n' < d  <=>  (q-1)*n' < q*d
    n0 = min(n, (q * d - 1) // (q - 1))
    if n0 < 1:
        return None
    size = Fraction(q * d, q * d - (q - 1) * n0)
    return (n - n0) + _largest_power_at_most(q, Fraction(int(size)))


def elias_k(q: int, n: int, d: int) -> int | None:
    """Elias-Bassalygo bound, minimised over the radius."""
    best = None
    vol = 0
    for r in range(0, n + 1):
        # need r <= theta*n and r^2 - 2 theta n r + theta n d > 0, with theta = (q-1)/q
        if q * r > (q - 1) * n:
            break
        vol += comb(n, r) * (q - 1) ** r
        denom = q * r * r - 2 * (q - 1) * n * r + (q - 1) * n * d
        if denom <= 0:
            continue
        size = Fraction((q - 1) * n * d * q**n, denom * vol)
        if size < 1:
            continue
        k = _largest_power_at_most(q, size)
        if best is None or k < best:
            best = k
    return best


@lru_cache(maxsize=None)
def k_opt(q: int, n: int, d: int) -> int:
    """Upper bound on the dimension of a q-ary [n, k, d] linear code.

    Minimum of the Singleton, Griesmer, Hamming, Plotkin and Elias bounds.
    """
    if d < 1 or n < 1:
        raise ValueError("need n >= 1 and d >= 1")
    if d > n:
        return 0
    cands = [singleton_k(q, n, d), griesmer_k(q, n, d), hamming_k(q, n, d)]
    for extra in (plotkin_k(q, n, d), elias_k(q, n, d)):
        if extra is not None:
            cands.append(extra)
    return max(0, min(cands))


# convex maximisation


def maximize_convex_sum(a: int, b: int, c: int, B: int, ell: int, literal: bool = False) -> int:
    """Majorant of max sum(M**ell) over multisets of c integers in [a, b] summing to B.

    Uses the extremal multiset with ceil((B - c*a)/(b - a)) copies of ``b``.
    ``literal=True`` gives the looser ``(B - c*a)/(b - a) + 1`` factor, which
    is then a Fraction.
    """
    if a < 0 or b < a or c < 1:
        raise ValueError("need 0 <= a <= b and c >= 1")
    if not (c * a <= B <= c * b):
        raise ValueError(f"infeasible: B={B} outside [{c * a}, {c * b}]")
    fa, fb = a**ell, b**ell
    if b == a:
        return c * fa
    if literal:
        return (Fraction(B - c * a, b - a) + 1) * (fb - fa) + c * fa
    top = -(-(B - c * a) // (b - a))
    return top * (fb - fa) + c * fa


# rank counts


def _gauss_prod(ell: int, t: int, s: int, q: int) -> int:
    num = prod((q**ell - q**i) * (q**t - q**i) for i in range(s))
    den = prod(q**s - q**i for i in range(s))
    return _exact_div(num, den)


@lru_cache(maxsize=None)
def rank_count(ell: int, t: int, s: int, q: int) -> int:
    """Number of ell x t matrices over GF(q) of rank s."""
    if s < 0 or s > min(ell, t):
        return 0
    return _gauss_prod(ell, t, s, q)


@lru_cache(maxsize=None)
def rank_count_no_zero_cols(ell: int, t: int, s: int, q: int) -> int:
    """Number of rank-s ell x t matrices over GF(q) without an all-zero column."""
    if s < 0 or s > min(ell, t):
        return 0
    return sum((-1) ** j * comb(t, j) * rank_count(ell, t - j, s, q) for j in range(t - s + 1))


# bad matrices for the upper bound on success


def falling_binom(x: int, j: int) -> int:
    """C(x, j) for a (possibly huge) integer x via the falling factorial."""
    if j < 0:
        return 0
    num = 1
    for i in range(j):
        num *= x - i
    return num // prod(range(1, j + 1))


def classes_fixed_count(q: int, ell: int, t: int, xi: int, j: int, literal: bool = False) -> int:
    """Matrices in which j given projective column classes each occur exactly xi times.

    The remaining ``t - j*xi`` columns avoid those classes, leaving
    ``q**ell - 1 - j*(q - 1)`` choices each; ``literal=True`` uses
    ``q**ell - q**j`` instead.
    """
    rest = t - j * xi
    if rest < 0:
        return 0
    others = q**ell - q**j if literal else q**ell - 1 - j * (q - 1)
    placements = prod(comb(t - z * xi, xi) for z in range(j))
    return placements * (q - 1) ** (j * xi) * others**rest


@lru_cache(maxsize=None)
def bad_matrix_count(q: int, ell: int, t: int, xi: int, literal: bool = False) -> int:
    """Matrices in E(q, ell, t) having some projective column class of multiplicity exactly xi."""
    if not 1 <= xi <= t:
        raise ValueError("need 1 <= xi <= t")
    nclasses = (q**ell - 1) // (q - 1)
    return sum(
        (-1) ** (j - 1) * falling_binom(nclasses, j) * classes_fixed_count(q, ell, t, xi, j, literal)
        for j in range(1, t // xi + 1)
    )


# probability that all rows of a random matrix lie in a code


def row_membership_bound(q: int, ell: int, n: int, k: int, A_n: int) -> Fraction:
    num = q ** (k * ell) * (q - 1) - (q**ell - 1) * (q**k - 1 - A_n) - (q - 1)
    return Fraction(num, (q - 1) * (q**ell - 1) ** n)


def row_membership_bound_simple(q: int, ell: int, n: int, k: int) -> Fraction:
    return Fraction(q ** (k * ell) - 1, (q**ell - 1) ** n)
