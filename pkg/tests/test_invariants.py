from __future__ import annotations

import random

import pytest

from qaffpbw import invariants as inv
from qaffpbw.affine import SigmaPoint, dual_point, type_info

A2 = type_info("A2^1")
P = SigmaPoint


def test_d_fund_examples():
    assert inv.d_fund(A2, P(1, 0), P(1, 2)) == 1
    assert inv.d_fund(A2, P(1, 0), P(1, 0)) == 0
    assert inv.d_fund(A2, P(1, 0), P(2, 1)) == 0


def test_lambda_examples():
    assert inv.lambda_fund(A2, P(1, 0), P(1, 2)) == 1
    assert inv.lambda_inf_fund(A2, P(1, 0), P(1, 0)) == -2
    assert inv.lambda_inf_fund(A2, P(1, 0), P(1, 2)) == 1


def test_de_tilde_examples():
    assert inv.de_tilde_fund(A2, P(1, 0), P(1, 2)) == 0
    # the k = -1 term d(x, D^-1 x) = 1 is the only contribution on a diagonal
    for x in A2.sigma0_points(-2, 4):
        assert inv.de_tilde_fund(A2, x, x) == 1
    # halved-difference description
    for x in A2.sigma0_points(0, 3):
        for y in A2.sigma0_points(0, 3):
            lam = inv.lambda_fund(A2, x, y)
            lam8 = inv.lambda_inf_fund(A2, x, y)
            assert lam - lam8 == 2 * inv.de_tilde_fund(A2, x, y)


def test_de_tilde_swapped_argument_identity():
    # de_tilde(x,y) + de_tilde(y,x) = d(x,y) - Lambda8(x,y)
    for x in A2.sigma0_points(-3, 5):
        for y in A2.sigma0_points(-3, 5):
            assert inv.de_tilde_fund(A2, x, y) + inv.de_tilde_fund(A2, y, x) == inv.d_fund(
                A2, x, y
            ) - inv.lambda_inf_fund(A2, x, y)
    # the pair ((2,3),(1,2)) separates the two argument orders
    assert inv.de_tilde_fund(A2, P(2, 3), P(1, 2)) == 0
    assert inv.de_tilde_fund(A2, P(1, 2), P(2, 3)) == 1
    assert inv.d_fund(A2, dual_point(A2, P(2, 3), -1), P(1, 2)) == 1


def test_zero_c_examples():
    assert inv.zero_c_fund(A2, P(1, 0), P(1, 2)) == 1
    assert inv.zero_c_fund(A2, P(1, 0), P(2, 3)) == 1
    assert inv.zero_c_fund(A2, P(1, 0), P(1, 8)) == 0


def test_pairing_examples():
    for x in A2.sigma0_points(0, 5):
        assert inv.pairing_E(A2, x, x) == 2
    assert inv.pairing_E(A2, P(1, 0), P(1, 2)) == -1
    assert inv.pairing_E(A2, P(2, 1), P(1, 0)) == 1


def test_root_coordinates_examples():
    basis = (P(1, 0), P(1, 2))
    assert inv.root_coordinates(A2, P(2, 1), basis) == (1, 1)
    assert inv.root_coordinates(A2, P(1, 0), basis) == (1, 0)
    assert inv.root_coordinates(A2, P(2, 3), basis) == (-1, 0)


def test_root_coordinates_rejects_bad_basis():
    with pytest.raises(ValueError):
        inv.root_coordinates(A2, P(1, 0), (P(1, 0), P(2, 3)))


def test_root_coordinates_off_component_point_pairs_to_zero():
    # labels off the parity component are orthogonal to the whole lattice
    assert inv.root_coordinates(A2, P(1, 1), (P(1, 0), P(1, 2))) == (0, 0)


def test_lambda_inf_word():
    assert inv.lambda_inf_word(A2, [P(1, 0), P(1, 2)], [P(2, 1)]) == -2
    assert inv.lambda_inf_word(A2, [], [P(1, 0)]) == 0
    assert inv.lambda_inf_word(A2, [P(1, 0)], [P(2, 1)]) == inv.lambda_inf_fund(
        A2, P(1, 0), P(2, 1)
    )


def _random_points(info, rng, count, span):
    pts = info.sigma0_points(-span, span)
    return [rng.choice(pts) for _ in range(count)]


def test_identity_suite_randomized():
    rng = random.Random(20240811)
    for n in (1, 2, 3, 4):
        info = type_info(f"A{n}^1")
        xs = _random_points(info, rng, 120, 10)
        ys = _random_points(info, rng, 120, 10)
        for x, y in zip(xs, ys):
            d = inv.d_fund(info, x, y)
            lam_xy = inv.lambda_fund(info, x, y)
            lam_yx = inv.lambda_fund(info, y, x)
            lam8 = inv.lambda_inf_fund(info, x, y)
            assert d == inv.d_fund(info, y, x)
            assert lam8 == inv.lambda_inf_fund(info, y, x)
            assert inv.lambda_inf_fund(info, dual_point(info, x, 1), y) == -lam8
            assert lam_xy == inv.lambda_fund(info, y, dual_point(info, x, 1))
            assert (lam_xy - lam8) % 2 == 0
            assert 2 * d == lam_xy + lam_yx
            assert inv.d_fund(
                info, dual_point(info, x, 1), dual_point(info, y, 1)
            ) == d


def test_root_module_pattern_randomized():
    rng = random.Random(7)
    for n in (1, 2, 3, 4):
        info = type_info(f"A{n}^1")
        for x in _random_points(info, rng, 40, 12):
            assert inv.is_root_module_pattern(info, x)


def test_between_expressions_exactness_flags():
    from qaffpbw.invariants import (
        InvariantValue,
        d_between,
        lambda_between,
        lambda_inf_between,
    )
    from qaffpbw.modexpr import Fund, Head

    x, y = Fund(P(1, 0)), Fund(P(1, 2))
    assert lambda_between(A2, x, y) == InvariantValue(1, True)
    assert d_between(A2, x, y) == InvariantValue(1, True)

    compound = Head((Fund(P(1, 2)), Fund(P(1, 0))))
    lam = lambda_between(A2, compound, y)
    assert not lam.exact
    assert lam.value == inv.lambda_fund(A2, P(1, 2), P(1, 2)) + inv.lambda_fund(
        A2, P(1, 0), P(1, 2)
    )
    # Lambda8 stays exact on compounds by additivity
    li = lambda_inf_between(A2, compound, y)
    assert li.exact
    assert li.value == inv.lambda_inf_word(A2, [P(1, 2), P(1, 0)], [P(1, 2)])


def test_lambda_splits_into_tail_sums():
    # Lambda = zero_c + de_tilde: the nonnegative and negative shift tails
    for x in A2.sigma0_points(-4, 6):
        for y in A2.sigma0_points(-4, 6):
            assert inv.lambda_fund(A2, x, y) == inv.zero_c_fund(
                A2, x, y
            ) + inv.de_tilde_fund(A2, x, y)
