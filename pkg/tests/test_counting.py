import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ialt.counting import (
    b_sum,
    b_total,
    bad_matrix_count,
    classes_fixed_count,
    elias_k,
    griesmer_k,
    hamming_k,
    k_opt,
    maximize_convex_sum,
    mds_weight_enum,
    plotkin_k,
    rank_count,
    rank_count_no_zero_cols,
    row_membership_bound,
    row_membership_bound_simple,
)
from oracles import SlowField, convex_sum_max, projective_multiplicities, rank_big_field

GF4 = SlowField(0b111, 2)


def brute_grs_weights(F, alpha, v, d):
    """Weight distribution of {c : H diag(v) c = 0} by full enumeration."""
    n = len(alpha)
    counts = [0] * (n + 1)
    for c in itertools.product(range(F.size), repeat=n):
        ok = True
        for r in range(d - 1):
            acc = 0
            for a, vi, ci in zip(alpha, v, c):
                acc ^= F.mul(F.mul(vi, F.pow(a, r)), ci)
            if acc:
                ok = False
                break
        if ok:
            counts[sum(1 for x in c if x)] += 1
    return counts


def test_mds_enumerator_matches_brute_force_over_gf4():
    # [4,2,3] code over GF(4) with locators {0, 1, w, w^2}; the zero locator keeps n = Q
    counts = brute_grs_weights(GF4, [0, 1, 2, 3], [1, 1, 1, 1], 3)
    assert counts == [mds_weight_enum(4, 3, w, 4) for w in range(5)]
    assert counts[3] == 12 and counts[4] == 3 and counts[2] == 0


def test_mds_enumerator_matches_brute_force_gf8():
    F = SlowField(0b1011, 3)
    alpha = [F.pow(2, i) for i in range(5)]
    v = [1, 3, 5, 7, 2]
    counts = brute_grs_weights(F, alpha, v, 4)
    assert counts == [mds_weight_enum(5, 4, w, 8) for w in range(6)]


@pytest.mark.parametrize("Q", [2, 4, 8, 16])
def test_mds_enumerator_sum_identity(Q):
    for n in range(1, 13):
        for d in range(1, n + 1):
            assert sum(mds_weight_enum(n, d, w, Q) for w in range(n + 1)) == Q ** (n - d + 1)


def test_mds_enumerator_rejects_bad_parameters():
    with pytest.raises(ValueError):
        mds_weight_enum(4, 6, 2, 4)
    with pytest.raises(ValueError):
        mds_weight_enum(4, 3, 5, 4)


def test_b_total_by_multiplier_enumeration():
    # [2,1,2] GRS over GF(4): one parity row v; count binary codewords for each of the 9 v
    total = 0
    for v in itertools.product(range(1, 4), repeat=2):
        for c in itertools.product((0, 1), repeat=2):
            if GF4.mul(v[0], c[0]) ^ GF4.mul(v[1], c[1]) == 0:
                total += 1
    assert total == 12
    assert b_total(2, 2, 2, 2) == 12
    assert b_sum(2, 2, 0, 2, 2) == 9


def test_b_sum_by_multiplier_enumeration_larger():
    # [3,2,2] GRS over GF(4) with locators 1, w, w^2, all 27 multiplier vectors
    alpha = [1, 2, 3]
    per_w = [0] * 4
    for v in itertools.product(range(1, 4), repeat=3):
        for c in itertools.product((0, 1), repeat=3):
            if not GF4.mul(v[0], c[0]) ^ GF4.mul(v[1], c[1]) ^ GF4.mul(v[2], c[2]):
                per_w[sum(c)] += 1
    assert per_w == [b_sum(3, 2, w, 2, 2) for w in range(4)]
    assert b_total(3, 2, 2, 2) >= 3**3
    assert alpha  # locators do not enter for a single parity row


def test_k_opt_examples():
    assert k_opt(2, 7, 3) == 4
    assert k_opt(2, 4, 4) == 1
    for q in (2, 4, 8):
        assert k_opt(q, 9, 1) == 9
    assert k_opt(2, 23, 7) == 12  # Golay code is perfect
    assert k_opt(2, 15, 5) >= 7  # BCH [15,7,5] exists


def brute_max_binary_dimension(n, d):
    """Largest k of a binary [n,k,>=d] code, by searching generator matrices in systematic form."""
    best = 0
    for k in range(1, n + 1):
        found = False
        for P in itertools.product(range(1 << (n - k)), repeat=k):
            rows = [(1 << (n - k + i)) | P[i] for i in range(k)]
            mind = n + 1
            for mask in range(1, 1 << k):
                w = 0
                for i in range(k):
                    if mask >> i & 1:
                        w ^= rows[i]
                mind = min(mind, bin(w).count("1"))
                if mind < d:
                    break
            if mind >= d:
                found = True
                break
        if not found:
            break
        best = k
    return best


@pytest.mark.parametrize("n", range(2, 8))
def test_k_opt_is_an_upper_bound_on_small_binary_codes(n):
    for d in range(1, n + 1):
        assert k_opt(2, n, d) >= brute_max_binary_dimension(n, d)


def test_individual_dimension_bounds():
    assert griesmer_k(2, 7, 3) == 4
    assert hamming_k(2, 7, 3) == 4
    assert plotkin_k(2, 4, 4) == 1
    assert elias_k(2, 4, 4) is not None
    assert k_opt(2, 4, 5) == 0


def test_maximize_convex_sum_examples():
    assert maximize_convex_sum(1, 4, 2, 5, 2) == 17
    assert maximize_convex_sum(3, 3, 4, 12, 3) == 4 * 27
    assert maximize_convex_sum(2, 5, 3, 6, 2) == 3 * 4
    assert maximize_convex_sum(1, 4, 2, 5, 2, literal=True) == (Fraction(3, 3) + 1) * 15 + 2
    assert maximize_convex_sum(1, 5, 2, 5, 2, literal=True) == (Fraction(3, 4) + 1) * 24 + 2
    with pytest.raises(ValueError):
        maximize_convex_sum(1, 4, 2, 9, 2)


def test_maximize_convex_sum_dominates_every_multiset():
    for a in range(1, 7):
        for b in range(a, 7):
            for c in range(1, 6):
                for B in range(c * a, c * b + 1):
                    for ell in range(1, 5):
                        brute = convex_sum_max(a, b, c, B, ell)
                        ours = maximize_convex_sum(a, b, c, B, ell)
                        assert ours >= brute
                        assert maximize_convex_sum(a, b, c, B, ell, literal=True) >= ours
                        if b > a and (B - c * a) % (b - a) == 0:
                            assert ours == brute


def all_matrices(q, ell, t):
    for flat in itertools.product(range(q), repeat=ell * t):
        yield [flat[i * t:(i + 1) * t] for i in range(ell)]


def brute_rank_counts(F, q, ell, t):
    """(M, N) rank histograms over GF(q) = subfield {0..q-1} of a SlowField of size q."""
    M = [0] * (min(ell, t) + 1)
    N = [0] * (min(ell, t) + 1)
    for E in all_matrices(q, ell, t):
        r = rank_big_field(F, E)
        M[r] += 1
        if all(any(E[i][j] for i in range(ell)) for j in range(t)):
            N[r] += 1
    return M, N


GF2 = SlowField(0b11, 1)


@pytest.mark.parametrize("ell,t", [(e, t) for e in range(1, 4) for t in range(1, 5)])
def test_rank_counts_binary_brute_force(ell, t):
    M, N = brute_rank_counts(GF2, 2, ell, t)
    assert M == [rank_count(ell, t, s, 2) for s in range(len(M))]
    assert N == [rank_count_no_zero_cols(ell, t, s, 2) for s in range(len(N))]


@pytest.mark.parametrize("ell,t", [(1, 3), (2, 2), (2, 3)])
def test_rank_counts_gf4_brute_force(ell, t):
    M, N = brute_rank_counts(GF4, 4, ell, t)
    assert M == [rank_count(ell, t, s, 4) for s in range(len(M))]
    assert N == [rank_count_no_zero_cols(ell, t, s, 4) for s in range(len(N))]


def test_rank_count_examples_and_sums():
    assert rank_count(2, 2, 0, 2) == 1
    assert rank_count(2, 2, 1, 2) == 9
    assert rank_count_no_zero_cols(2, 2, 1, 2) == 3
    assert rank_count_no_zero_cols(2, 3, 1, 2) == 3
    assert rank_count_no_zero_cols(4, 4, 3, 2) == 27720
    assert rank_count_no_zero_cols(4, 4, 4, 2) == 20160
    for q in (2, 3, 4):
        for ell in range(1, 7):
            for t in range(1, 7):
                assert sum(rank_count(ell, t, s, q) for s in range(t + 1)) == q ** (ell * t)
                assert sum(rank_count_no_zero_cols(ell, t, s, q) for s in range(t + 1)) == (q**ell - 1) ** t


def brute_Z(F, q, ell, t, xi):
    """Matrices without zero columns having a projective class of multiplicity exactly xi."""
    nonzero = [c for c in itertools.product(range(q), repeat=ell) if any(c)]
    count = 0
    for cols in itertools.product(nonzero, repeat=t):
        mult = projective_multiplicities(cols, F.mul, q)
        if xi in mult.values():
            count += 1
    return count


@pytest.mark.parametrize("ell,t", [(e, t) for e in range(1, 4) for t in range(1, 5)] + [(2, 5)])
def test_bad_matrix_count_binary(ell, t):
    for xi in range(1, t + 1):
        assert bad_matrix_count(2, ell, t, xi) == brute_Z(GF2, 2, ell, t, xi)


@pytest.mark.parametrize("ell,t", [(2, 2), (2, 3), (2, 4)])
def test_bad_matrix_count_gf4(ell, t):
    for xi in range(1, t + 1):
        assert bad_matrix_count(4, ell, t, xi) == brute_Z(GF4, 4, ell, t, xi)


def test_bad_matrix_count_examples():
    assert bad_matrix_count(2, 2, 2, 2) == 3
    assert bad_matrix_count(2, 2, 3, 3) == 3


def test_literal_remaining_column_count_differs_from_enumeration():
    # with two fixed classes the remaining columns have q^ell - 1 - 2(q-1) choices, not q^ell - q^2
    assert classes_fixed_count(2, 2, 2, 1, 2) == 2 * 1 * 1
    assert classes_fixed_count(2, 3, 4, 1, 2, literal=True) != classes_fixed_count(2, 3, 4, 1, 2)
    assert bad_matrix_count(2, 3, 4, 1, literal=True) != brute_Z(GF2, 2, 3, 4, 1)


def test_row_membership_bound_against_enumeration():
    # binary [4,2] code spanned by 1100 and 0011; probability that all rows of E lie in it
    code = {(0, 0, 0, 0), (1, 1, 0, 0), (0, 0, 1, 1), (1, 1, 1, 1)}
    A_n = 1
    for ell in (1, 2, 3):
        nonzero = [c for c in itertools.product((0, 1), repeat=ell) if any(c)]
        good = total = 0
        for cols in itertools.product(nonzero, repeat=4):
            total += 1
            rows = [tuple(col[i] for col in cols) for i in range(ell)]
            good += all(r in code for r in rows)
        exact = Fraction(good, total)
        assert exact <= row_membership_bound(2, ell, 4, 2, A_n)
        assert row_membership_bound(2, ell, 4, 2, A_n) <= row_membership_bound_simple(2, ell, 4, 2)


def test_row_membership_bound_edge_cases():
    assert row_membership_bound(2, 2, 4, 0, 0) == 0
    full = row_membership_bound_simple(2, 3, 4, 4)
    assert full == Fraction(2**12 - 1, 7**4) and full >= 1


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 12), st.integers(1, 12), st.sampled_from([2, 3, 4, 5, 8, 16, 32]))
def test_mds_sum_identity_property(n, d, Q):
    d = min(d, n)
    assert sum(mds_weight_enum(n, d, w, Q) for w in range(n + 1)) == Q ** (n - d + 1)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 40), st.integers(1, 40), st.sampled_from([2, 4, 8]))
def test_k_opt_never_exceeds_singleton(n, d, q):
    d = min(d, n)
    assert 0 <= k_opt(q, n, d) <= n - d + 1
