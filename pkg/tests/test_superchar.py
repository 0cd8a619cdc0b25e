from fractions import Fraction

import pytest

from hookschur.glchar import GlCharacter, decompose_character
from hookschur.partitions import GeneralizedPartition as G, Partition, enumerate_generalized, enumerate_partitions
from hookschur.polyring import HalfSeries, Kind, LaurentPoly, Q, X, Y, Z, series_inv_unit
from hookschur.superchar import (
    AffineWeight,
    CHAR_GRADING,
    UndecidableReflection,
    affine_character_mn,
    affine_character_nn,
    aux_coefficients,
    character,
    dual_partition,
    fock_decomposition,
    glmn_product,
    glmn_product_coefficient,
    h_of,
    integrable_weight,
    level_one_sum,
    nonstandard_weight,
    odd_reflect_chain,
    odd_reflection_steps,
    q_character,
    q_identity_sides,
    specialized_level_one_sum,
    verify_duality_symmetry,
    verify_q_identity,
    weight_of,
)
from hookschur.symfun import hook_schur_q


def test_weight_nonnegative_rank_one():
    # λ ω_{1/2} + Λ_0
    w = weight_of(G((3,)))
    assert w.as_map() == {1: 3}
    assert w["1/2"] == 3 and w[1] == 0
    assert w.central_charge == 1
    assert str(w) == "3*w(1/2) + L0"


def test_weight_negative_rank_one():
    # -ω_0 + (λ+1) ω_{-1/2} + Λ_0 at λ = -2
    w = weight_of(G((-2,)))
    assert w[0] == -1
    assert w["-1/2"] == -1
    assert w.support() == [Fraction(-1, 2), 0]


def test_weight_vacuum_and_charge():
    assert weight_of(G((0,))).as_map() == {}
    assert weight_of(G((0, 0, 0))).central_charge == 3


@pytest.mark.parametrize("lam", range(-4, 5))
def test_rank_one_weight_summary(lam):
    w = weight_of(G((lam,)))
    if lam >= 0:
        expected = {1: lam} if lam else {}
    else:
        expected = {0: -1}
        if lam + 1:
            expected[-1] = lam + 1
    assert w.as_map() == expected


def test_weight_conjugate_clauses_rank_two():
    # (2,1): columns (2,1) give Λ_1 = <2-1> = 1
    w = weight_of(G((2, 1)))
    assert w[1] == 1 and w[2] == 0
    assert w["1/2"] == 2 and w["3/2"] == 0


@pytest.mark.parametrize("lam, h", [(0, 0), (1, Fraction(1, 2)), (3, Fraction(3, 2)), (-1, 0), (-2, Fraction(1, 2)), (-4, Fraction(3, 2))])
def test_h_matches_level_one_prefactors(lam, h):
    # q^{-λ/2} for λ >= 0 and q^{(λ+1)/2} for λ < 0
    assert h_of(G((lam,))) == h
    assert h == (Fraction(lam, 2) if lam >= 0 else -Fraction(lam + 1, 2))


def test_character_vacuum_constant_term():
    c = character(G((0,)), 2, 2, 3)
    assert c.coeff(()) == 1
    assert character(G((1,)), 2, 2, 3).coeff(()) == 0


@pytest.mark.parametrize("lam", range(-2, 3))
def test_character_rank_one_matches_direct_sum(lam):
    assert character(G((lam,)), 2, 2, 3) == level_one_sum(lam, 2, 2, 3)


def test_character_rank_two_degree_one_against_fock():
    lam = G((1, 0))
    dec = fock_decomposition(2, 1, 1, 3)
    assert character(lam, 1, 1, 3) == dec[lam]
    degree_one = {m: c for m, c in dec[lam].terms.items() if sum(e for _, e in m) == 1}
    assert degree_one == {((Y(1), 1),): 1, ((Z(1), 1),): 1}


def test_fock_decomposition_covers_character_support():
    for l in (1, 2):
        dec = fock_decomposition(l, 1, 1, 3)
        for lam in enumerate_generalized(3, l):
            expected = dec.get(lam, LaurentPoly.zero(3, CHAR_GRADING))
            assert character(lam, 1, 1, 3) == expected, lam


def test_aux_coefficients_rank_one():
    # s_(1)(x, x^-1)(1 + x^-1) = x + 1 + x^-1 + x^-2
    assert aux_coefficients(Partition((1,)), 1) == {G((1,)): 1, G((0,)): 1, G((-1,)): 1, G((-2,)): 1}


def test_q_character_constant_term():
    for l in (1, 2):
        for lam in enumerate_generalized(2, l):
            assert q_character(lam, 2)[0] == 1, lam


def test_vacuum_is_sum_of_all_hook_schur():
    order = 4
    total = HalfSeries({}, 2 * order)
    # at rank one only shapes with at most two rows occur
    for mu in enumerate_partitions(2 * order, 2):
        total = total + hook_schur_q(mu, order)
    assert q_character(G((0,)), order) == total


def fock_q_series(order2):
    out = HalfSeries.one(order2)
    for k in range(1, order2 + 1):
        if k % 2:
            f = HalfSeries({0: 1, k: 1}, order2)
        else:
            f = series_inv_unit(HalfSeries({0: 1, k: -1}, order2))
        out = out * f * f
    return out


@pytest.mark.parametrize("lam", range(-3, 4))
def test_q_character_rank_one_closed_form(lam):
    order2 = 8
    pole = 2 * lam + 1 if lam >= 0 else -2 * lam - 1
    closed = series_inv_unit(HalfSeries({0: 1, pole: 1}, order2)) * fock_q_series(order2)
    assert q_character(G((lam,)), Fraction(order2, 2)) == closed


@pytest.mark.parametrize("lam", range(-3, 4))
def test_q_identity(lam):
    ok, diff = verify_q_identity(lam, 5)
    assert ok, diff


def test_q_identity_sides_detect_change():
    lhs, rhs = q_identity_sides(1, 3)
    assert lhs == rhs
    assert (lhs + HalfSeries.qpow(3, 6)) != rhs


def test_dual_partition():
    assert dual_partition(G((2,))) == G((-3,))
    assert dual_partition(G((1, 0))) == G((-1, -2))
    for lam in enumerate_generalized(2, 2):
        assert dual_partition(dual_partition(lam)) == lam


@pytest.mark.parametrize("lam", [(2,), (0,), (1, 0), (2, -1)])
def test_duality_symmetry(lam):
    ok, diff = verify_duality_symmetry(G(lam), 3)
    assert ok, diff


def test_integrable_weight_branches():
    assert str(integrable_weight(0, 2, 2)) == "L0"
    w = integrable_weight(4, 2, 1)
    assert w.eps == (1, 1) and w.delta_part == (2,)
    w = integrable_weight(-3, 1, 2)
    assert w.eps == (0,) and w.delta_part == (0, -3)
    assert str(integrable_weight(2, 3, 1)) == "e1 + e2 + L0"


def expected_family(lam, n):
    eps, delta = [0] * n, [0] * n
    if 0 <= lam <= n:
        eps[:lam] = [1] * lam
    elif lam > n:
        eps = [1] * n
        delta[0] = lam - n
    else:
        delta[-1] = lam
    return AffineWeight(tuple(eps), tuple(delta))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_odd_reflection_families(n):
    for lam in range(-3, n + 4):
        assert odd_reflect_chain(nonstandard_weight(lam, n)) == expected_family(lam, n)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_odd_reflection_steps_subtract_one_odd_root(n):
    for lam in range(-3, n + 4):
        steps = odd_reflection_steps(nonstandard_weight(lam, n))
        for st in steps:
            assert st.before.lambda0 == st.after.lambda0 == 1
            i, j = st.root
            diff_eps = [a - b for a, b in zip(st.after.eps, st.before.eps)]
            diff_delta = [a - b for a, b in zip(st.after.delta_part, st.before.delta_part)]
            if st.pairing == 0:
                assert st.before == st.after
            else:
                # Λ - (δ_i - ε_j)
                assert diff_eps == [1 if k == j - 1 else 0 for k in range(n)]
                assert diff_delta == [-1 if k == i - 1 else 0 for k in range(n)]


def test_odd_reflection_step_count():
    # the chain swaps each δ_i past each ε_j with j < i ... one swap per inversion
    for n in (1, 2, 3, 4):
        assert len(odd_reflection_steps(nonstandard_weight(0, n))) == n * (n + 1) // 2


def test_odd_reflection_rejects_bad_input():
    with pytest.raises(ValueError):
        odd_reflect_chain(AffineWeight((0, 0), (0,)))
    with pytest.raises(UndecidableReflection):
        odd_reflect_chain(AffineWeight((Fraction(1, 2),), (0,)))


def test_affine_constant_term():
    for m, n in [(1, 1), (2, 1)]:
        assert affine_character_mn(0, m, n, 2).coeff(()) == 1
    assert affine_character_nn(0, 1, 2) == affine_character_mn(0, 1, 1, 2)


def test_affine_lowest_term_lambda_one():
    # the top piece is the natural gl(1|1) module: weights y1 and z1
    p = affine_character_nn(1, 1, 1)
    lowest = {m: c for m, c in p.terms.items() if dict(m).get(Q, 0) == 0}
    assert lowest == {((Y(1), 1),): 1, ((Z(1), 1),): 1}


@pytest.mark.parametrize("lam", [-1, 0, 1])
def test_glmn_product_two_routes(lam):
    order = Fraction(3, 2)
    prod = glmn_product(2, 1, 3 + abs(lam))
    assert glmn_product_coefficient(prod, lam, order) == affine_character_mn(lam, 2, 1, order)


@pytest.mark.parametrize("lam", range(-2, 3))
def test_specialization_matches_q_character(lam):
    order = 3
    specialized = specialized_level_one_sum(lam, order)
    shift = 2 * h_of(G((lam,)))
    assert specialized == q_character(G((lam,)), order).shift(int(shift)).truncate(2 * order)
