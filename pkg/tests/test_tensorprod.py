import json

import pytest

from hookschur.glchar import branching_gl_sum, lr_coefficients
from hookschur.partitions import GeneralizedPartition as G, Partition, enumerate_generalized
from hookschur.tensorprod import tensor_decompose, verify_tensor_against_branching


def test_standard_times_vacuum():
    dec = tensor_decompose(G((1,)), 1, G((0,)), 1, 4)
    assert dec.terms == {G((1, 0)): 1, G((2, -1)): 1}
    assert [(ch.lam, ch.d) for ch in dec.channels] == [(Partition((1,)), 0), (Partition((3,)), 1)]
    # the oracle agrees and puts nothing on (0,-1)
    assert branching_gl_sum(G((0, -1)), 1, 1).get((G((1,)), G((0,))), 0) == 0


def test_vacuum_times_vacuum():
    dec = tensor_decompose(G((0,)), 1, G((0,)), 1, 4)
    assert dec.terms == {G((0, 0)): 1, G((1, -1)): 1, G((2, -2)): 1}
    for ch in dec.channels:
        a = Partition([ch.d])
        assert ch.multiplicity == lr_coefficients(a, a)[ch.lam]


def test_standard_times_standard_matches_oracle():
    dec = tensor_decompose(G((1,)), 1, G((1,)), 1, 6)
    for kappa, m in dec.terms.items():
        assert branching_gl_sum(kappa, 1, 1)[(G((1,)), G((1,)))] == m
    ok, rep = verify_tensor_against_branching(G((1,)), 1, G((1,)), 1, 6)
    assert ok and rep["checked"] >= len(dec.terms)


def test_rank_two_by_one():
    ok, rep = verify_tensor_against_branching(G((1, 0)), 2, G((1,)), 1, 3)
    assert ok, rep["mismatches"]


def test_outputs_have_full_length_and_positive_multiplicity():
    dec = tensor_decompose(G((1, -1)), 2, G((-2,)), 1, 5)
    assert dec.terms
    assert all(len(k) == 3 and m > 0 for k, m in dec.terms.items())


@pytest.mark.parametrize("l, r", [(1, 1), (2, 1), (1, 2)])
def test_sweep_against_oracle(l, r):
    for mu in enumerate_generalized(1, l):
        for nu in enumerate_generalized(1, r):
            ok, rep = verify_tensor_against_branching(mu, l, nu, r, 4)
            assert ok, rep["mismatches"]


def test_block_swap_symmetry():
    for mu in enumerate_generalized(2, 2):
        for nu in enumerate_generalized(2, 1):
            assert tensor_decompose(mu, 2, nu, 1, 4).terms == tensor_decompose(nu, 1, mu, 2, 4).terms


def test_plain_lr_when_everything_is_a_partition():
    mu, nu = G((2, 1)), G((1,))
    dec = tensor_decompose(mu, 2, nu, 1, 4)
    for lam, c in lr_coefficients(Partition((2, 1)), Partition((1,))).items():
        assert dec.terms[G(lam.padded(3))] == c


def representation(kappa):
    d = max(0, -kappa[len(kappa) - 1])
    return Partition(p + d for p in kappa), d


def test_shift_covariance():
    bound = 4
    for mu in enumerate_generalized(1, 1):
        for nu in enumerate_generalized(1, 1):
            base = tensor_decompose(mu, 1, nu, 1, bound)
            shifted = tensor_decompose(mu.shift(1), 1, nu.shift(1), 1, bound + 2)
            for kappa, m in base.terms.items():
                assert shifted.terms[kappa.shift(1)] == m
            for kappa, m in shifted.terms.items():
                lam, d = representation(kappa.shift(-1))
                if lam.size() <= bound and d <= bound:
                    assert base.terms[kappa.shift(-1)] == m


def test_json_report():
    dec = tensor_decompose(G((1,)), 1, G((0,)), 1, 4)
    data = json.loads(json.dumps(dec.to_json()))
    assert data["bound"] == 4
    assert {tuple(ch["weight"]): ch["d"] for ch in data["channels"]} == {(1, 0): 0, (2, -1): 1}


def test_input_validation():
    with pytest.raises(ValueError):
        tensor_decompose(G((1, 0)), 1, G((0,)), 1, 4)
    with pytest.raises(ValueError):
        tensor_decompose(G((1,)), 1, G((0,)), 1, -1)
