import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import generalized, partitions
from hookschur.glchar import (
    GlCharacter,
    NonCharacter,
    all_permutations_agree,
    branching_gl_sum,
    character_from_map,
    decompose_character,
    gl_character,
    kostka,
    lr_coefficients,
    mixed_tensor_coefficients,
    transpose_variables,
)
from hookschur.partitions import GeneralizedPartition as G, Partition, enumerate_partitions, partitions_of
from hookschur.polyring import LaurentPoly, X
from hookschur.symfun import schur


def P(*parts):
    return Partition(parts)


def mono(*exps):
    return LaurentPoly.monomial({X(i + 1): e for i, e in enumerate(exps)})


def xs(n):
    return [X(i) for i in range(1, n + 1)]


def test_gl_character_examples():
    assert gl_character(G((1,))).poly == mono(1)
    assert gl_character(G((-1,))).poly == mono(-1)
    assert gl_character(G((1, -1))).poly == mono(1, -1) + 1 + mono(-1, 1)


@settings(max_examples=30, deadline=None)
@given(generalized(2, 2), st.integers(-2, 2))
def test_shift_covariance(lam, d):
    det = mono(*([d] * len(lam)))
    assert gl_character(lam.shift(d)).poly == det * gl_character(lam).poly


@settings(max_examples=30, deadline=None)
@given(generalized(3, 2))
def test_characters_are_symmetric(lam):
    c = gl_character(lam)
    assert c.is_symmetric()
    assert all_permutations_agree(c)
    assert transpose_variables(c, 1, 3) == c


def weyl_dimension(parts):
    num, den = 1, 1
    n = len(parts)
    for i, j in itertools.combinations(range(n), 2):
        num *= parts[i] - parts[j] + j - i
        den *= j - i
    return num // den


@pytest.mark.parametrize("lam", [(2, 1, 0), (3, 1, -1), (0, 0, -2), (2, 2, 2), (4, 0)])
def test_dimension_against_weyl_formula(lam):
    assert gl_character(G(lam)).dimension() == weyl_dimension(lam)


def test_decompose_examples():
    p = mono(1) + 1 + mono(-1) + mono(-2)
    assert decompose_character(p, 1) == {G((1,)): 1, G((0,)): 1, G((-1,)): 1, G((-2,)): 1}
    v = GlCharacter(2, schur(P(1), xs(2)))
    vdual = gl_character(G((0, -1)))
    assert decompose_character(v * vdual) == {G((1, -1)): 1, G((0, 0)): 1}


@settings(max_examples=30, deadline=None)
@given(st.dictionaries(generalized(2, 2), st.integers(1, 3), min_size=1, max_size=4))
def test_decompose_round_trip(terms):
    assert decompose_character(character_from_map(terms, 2)) == terms


def test_decompose_rejects_non_characters():
    with pytest.raises(NonCharacter):
        decompose_character(mono(1, 0), 2)  # not symmetric
    with pytest.raises(NonCharacter):
        decompose_character(mono(1, 0) + mono(0, 1) - mono(1, 1) * 2, 2)
    with pytest.raises(NonCharacter):
        decompose_character(gl_character(G((1, 0))) - gl_character(G((2, 0))))


def test_kostka_small_table():
    # K_{(2,1), (1,1,1)} = 2 and K_{(3), μ} = 1
    assert kostka((2, 1, 0), (1, 1, 1)) == 2
    assert kostka((3, 0, 0), (1, 1, 1)) == 1
    assert kostka((2, 2, 0), (2, 1, 1)) == 1


def test_lr_examples():
    assert lr_coefficients(P(1), P(1)) == {P(2): 1, P(1, 1): 1}
    assert lr_coefficients(P(), P(3, 1)) == {P(3, 1): 1}
    assert lr_coefficients(P(2, 1), P(2, 1))[P(3, 2, 1)] == 2


def lr_oracle(mu, nu, rank):
    prod = schur(mu, xs(rank)) * schur(nu, xs(rank))
    return {lam.to_partition(): m for lam, m in decompose_character(prod, rank).items()}


def test_lr_against_schur_products():
    shapes = [p for n in range(4) for p in partitions_of(n)]
    for mu, nu in itertools.product(shapes, repeat=2):
        rank = max(len(mu) + len(nu), 1)
        assert lr_coefficients(mu, nu) == lr_oracle(mu, nu, rank), (mu, nu)


def test_lr_length_bound_loses_nothing():
    # the product in rank |μ|+|ν| has no constituent longer than l(μ)+l(ν)
    shapes = [p for n in range(3) for p in partitions_of(n)]
    for mu, nu in itertools.product(shapes, repeat=2):
        rank = max(mu.size() + nu.size(), 1)
        assert lr_coefficients(mu, nu) == lr_oracle(mu, nu, rank)


@settings(max_examples=30, deadline=None)
@given(partitions(4), partitions(4))
def test_lr_symmetry(mu, nu):
    assert lr_coefficients(mu, nu) == lr_coefficients(nu, mu)


@settings(max_examples=20, deadline=None)
@given(partitions(3), partitions(3), st.integers(1, 4))
def test_lr_dimension_check(mu, nu, n):
    def dim(lam):
        return weyl_dimension(lam.padded(n)) if len(lam) <= n else 0

    total = sum(c * dim(lam) for lam, c in lr_coefficients(mu, nu).items())
    assert total == dim(mu) * dim(nu)


@pytest.mark.parametrize("a, b", [(0, 0), (2, 1), (1, 3), (3, 3)])
def test_mixed_tensor_rank_one(a, b):
    assert mixed_tensor_coefficients(P(a), P(b), 1) == {G((a - b,)): 1}


def test_mixed_tensor_examples():
    assert mixed_tensor_coefficients(P(2, 1), P(), 2) == {G((2, 1)): 1}
    assert mixed_tensor_coefficients(P(1), P(1), 2) == {G((1, -1)): 1, G((0, 0)): 1}
    with pytest.raises(ValueError):
        mixed_tensor_coefficients(P(1, 1, 1), P(), 2)


def test_branching_examples():
    assert branching_gl_sum(G((1, 0)), 1, 1) == {(G((1,)), G((0,))): 1, (G((0,)), G((1,))): 1}
    assert branching_gl_sum(G((2, 2, 2)), 2, 1) == {(G((2, 2)), G((2,))): 1}
    assert branching_gl_sum(G((-1, -1)), 1, 1) == {(G((-1,)), G((-1,))): 1}


def test_branching_matches_lr_for_partitions():
    for lam in [P(2, 1), P(3, 1, 1), P(2, 2, 1), P(3, 2)]:
        got = branching_gl_sum(G(lam.padded(3)), 2, 1)
        expected = {}
        for mu in enumerate_partitions(lam.size(), 2):
            for nu in enumerate_partitions(lam.size() - mu.size(), 1):
                if mu.size() + nu.size() != lam.size():
                    continue
                c = lr_coefficients(mu, nu).get(lam, 0)
                if c:
                    expected[(G(mu.padded(2)), G(nu.padded(1)))] = c
        assert got == expected, lam
