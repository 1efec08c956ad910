import itertools

import numpy as np
import pytest

from ialt.codes import (
    CodeError,
    GrsParams,
    alternant_expand,
    build_code,
    codeinfo,
    dimension_bounds,
    encode,
    expand_over_subfield,
    expansion_basis,
    grs_parity_matrix,
    in_subfield,
)
from ialt.decoder import syndromes
from ialt.gf2m import build_field, subfield_elements
from oracles import SlowField, rank_big_field, rank_mod_p


def test_parity_matrix_examples():
    F = build_field(1, 4)
    g = F.generator
    grs = GrsParams(F, 3, 2, (g, F.pow(g, 2), F.pow(g, 3)), (1, 1, 1))
    assert grs_parity_matrix(grs).tolist() == [[1, 1, 1]]
    grs = GrsParams(F, 3, 3, (g, F.pow(g, 2), F.pow(g, 3)), (1, 1, 1))
    assert grs_parity_matrix(grs)[1].tolist() == [g, F.pow(g, 2), F.pow(g, 3)]


@pytest.mark.parametrize("s,m,d", [(1, 4, 5), (2, 2, 7), (1, 5, 11), (2, 3, 9)])
def test_parity_matrix_has_full_rank(s, m, d):
    F = build_field(s, m)
    grs = GrsParams.random_multipliers(F, d, seed=3)
    P = grs_parity_matrix(grs)
    slow = SlowField(F.irreducible, F.degree)
    assert rank_big_field(slow, P.tolist()) == d - 1
    for j in range(grs.n):
        for r in range(d - 1):
            assert P[r, j] == F.mul(grs.v[j], F.pow(grs.alpha[j], r))


def test_grs_parameter_validation():
    F = build_field(1, 4)
    with pytest.raises(CodeError):
        GrsParams.default(F, 1)
    with pytest.raises(CodeError):
        GrsParams.default(F, 5, n=16)
    with pytest.raises(CodeError):
        GrsParams(F, 2, 2, (1, 1), (1, 1))
    with pytest.raises(CodeError):
        GrsParams(F, 2, 2, (1, 0), (1, 1))
    with pytest.raises(CodeError):
        GrsParams(F, 2, 2, (1, 2), (0, 1))
    with pytest.raises(CodeError):
        build_code(3, 2, 3)


def brute_binary_code_size(code):
    """Number of binary words annihilated by H diag(v), by full enumeration."""
    F = code.field
    P = code.P
    count = 0
    for bits in itertools.product((0, 1), repeat=code.n):
        c = np.array(bits, dtype=np.int64)
        if not np.bitwise_xor.reduce(np.where(c[None, :] == 1, P, 0), axis=1).any():
            count += 1
    assert F.q == 2
    return count


def test_dimension_of_small_binary_codes_by_enumeration():
    F = build_field(1, 4)
    # v = 1: zeros at alpha^0..alpha^3, so the cyclotomic cosets {0}, {1,2,4,8}, {3,6,12,9}
    code = alternant_expand(GrsParams.default(F, 5))
    assert code.k == 6
    assert brute_binary_code_size(code) == 2**6
    # v = alpha gives the narrow-sense BCH code [15, 7, 5]
    narrow = alternant_expand(GrsParams.default(F, 5, v=GrsParams.default(F, 5).alpha))
    assert narrow.k == 7
    assert brute_binary_code_size(narrow) == 2**7


@pytest.mark.parametrize("q,m,d", [(2, 4, 7), (4, 2, 5), (4, 3, 7), (8, 2, 5), (2, 6, 13)])
def test_generator_satisfies_parity_checks(q, m, d):
    code = build_code(q, m, d)
    F = code.field
    G = code.generator
    assert G.shape == (code.k, code.n)
    assert in_subfield(code, G)
    for row in G:
        for prow in code.P:
            acc = 0
            for x, y in zip(row, prow):
                acc ^= F.mul(int(x), int(y))
            assert acc == 0
    # generator has full rank and is in reduced row-echelon form
    lead = [int(np.flatnonzero(r)[0]) for r in G]
    assert lead == sorted(lead) and len(set(lead)) == len(lead)
    for i, c in enumerate(lead):
        assert G[i, c] == 1 and np.count_nonzero(G[:, c]) == 1


def test_expansion_recombines_to_original_entries():
    F = build_field(2, 3)
    basis, inv = expansion_basis(F)
    M = np.arange(F.size, dtype=np.int64)[None, :]
    X = expand_over_subfield(M, F, inv)
    sub = set(subfield_elements(F))
    assert set(X.ravel().tolist()) <= sub
    for j in range(F.size):
        acc = 0
        for i, g in enumerate(basis):
            acc ^= F.mul(int(X[i, j]), g)
        assert acc == j


def test_dimension_bounds_hold_for_random_multipliers():
    F = build_field(1, 4)
    for d in (3, 5, 7):
        lo, hi = dimension_bounds(15, d, 2, 4)
        for seed in range(100):
            code = alternant_expand(GrsParams.random_multipliers(F, d, seed))
            assert lo <= code.k <= hi
            if seed < 10:
                assert code.k == code.n - rank_mod_p(code.parity_q.tolist())


def test_k_is_n_minus_rank_of_expanded_parity():
    code = build_code(2, 5, 7, v_seed=11)
    assert code.k == code.n - rank_mod_p(code.parity_q.tolist())
    assert rank_mod_p(code.generator.tolist()) == code.k
    prod = (code.generator @ code.parity_q.T) % 2
    assert not prod.any()


def test_dimension_bounds_examples():
    assert dimension_bounds(15, 5, 2, 4)[0] == 0
    assert dimension_bounds(1023, 51, 2, 10)[0] == 523
    for n, d in [(15, 5), (31, 11), (63, 9)]:
        assert dimension_bounds(n, d, 2, 5)[1] <= n - d + 1


def test_encode_round_trip_and_errors():
    code = build_code(2, 4, 5)
    zero = encode(code, np.zeros((3, code.k), dtype=np.int64))
    assert not zero.any()
    rng = np.random.default_rng(0)
    C = encode(code, rng.integers(0, 2, size=(2, code.k)))
    assert not syndromes(C, code).any()
    with pytest.raises(CodeError):
        encode(code, np.zeros((2, code.k + 1), dtype=np.int64))


def test_codeinfo_fields():
    info = codeinfo(build_code(2, 10, 51), 2)
    assert set(info) == {"q", "m", "n", "d", "ell", "k_A", "k_lower", "k_upper", "t_max"}
    assert info["t_max"] == 33 and info["n"] == 1023
    assert info["k_lower"] <= info["k_A"] <= info["k_upper"]


def test_root_positions_invert_locators():
    code = build_code(2, 4, 5, n=10)
    F = code.field
    for j, a in enumerate(code.grs.alpha):
        k = int(F.log[F.inv(a)])
        assert code.root_pos[k] == j
    assert (code.root_pos == -1).sum() == F.order - code.n
