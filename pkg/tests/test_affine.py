from __future__ import annotations

import json

import pytest

from qaffpbw import affine
from qaffpbw.affine import (
    AffineTypeError,
    NoProviderError,
    SigmaPoint,
    denom_zeros,
    dual_point,
    load_denominator_json,
    sigma_quiver,
    type_info,
)

A2 = type_info("A2^1")


def test_type_info_a2():
    assert A2.rank == 2
    assert A2.fin_type == ("A", 2)
    assert A2.dual_shift_exponent == 3
    assert A2.star(1) == 2 and A2.star(2) == 1


def test_type_info_b3():
    info = type_info("B3^1")
    assert info.fin_type == ("A", 5)
    assert info.rank == 3


def test_type_info_a1():
    info = type_info("A1^1")
    assert info.dual_shift_exponent == 2
    assert info.star(1) == 1


def test_type_info_unknown():
    with pytest.raises(AffineTypeError):
        type_info("H4^1")
    with pytest.raises(AffineTypeError):
        type_info("C2^1")


def test_finite_type_table():
    rows = {
        "A4^1": ("A", 4),
        "B2^1": ("A", 3),
        "B4^1": ("A", 7),
        "C3^1": ("D", 4),
        "D5^1": ("D", 5),
        "A2^2": ("A", 2),
        "A6^2": ("A", 6),
        "A5^2": ("A", 5),
        "D4^2": ("D", 4),
        "E6^1": ("E", 6),
        "E7^1": ("E", 7),
        "E8^1": ("E", 8),
        "F4^1": ("E", 6),
        "G2^1": ("D", 4),
        "E6^2": ("E", 6),
        "D4^3": ("D", 4),
    }
    for name, fin in rows.items():
        assert type_info(name).fin_type == fin


def test_mark_sums_against_textbook_values():
    # (sum of marks, sum of comarks) for each family at sample ranks
    expected = {
        "A1^1": (2, 2),
        "A3^1": (4, 4),
        "B2^1": (4, 3),
        "B4^1": (8, 7),
        "C3^1": (6, 4),
        "C4^1": (8, 5),
        "D4^1": (6, 6),
        "D6^1": (10, 10),
        "E6^1": (12, 12),
        "E7^1": (18, 18),
        "E8^1": (30, 30),
        "F4^1": (12, 9),
        "G2^1": (6, 4),
        "A2^2": (3, 3),
        "A4^2": (5, 5),
        "A3^2": (3, 4),
        "A5^2": (5, 6),
        "D4^2": (4, 6),
        "D5^2": (5, 8),
        "E6^2": (9, 12),
        "D4^3": (4, 6),
    }
    for name, (h, hv) in expected.items():
        info = type_info(name)
        assert (info.marks_sum, info.comarks_sum) == (h, hv), name


def test_dual_shift_defined_only_on_neg_q_lattice():
    assert type_info("A4^1").dual_shift_exponent == 5
    assert type_info("D5^1").dual_shift_exponent == 8
    assert type_info("C3^1").dual_shift_exponent == 4  # parities agree
    assert type_info("B3^1").dual_shift_exponent is None
    assert type_info("F4^1").dual_shift_exponent is None
    assert type_info("A5^2").dual_shift_exponent is None
    with pytest.raises(NoProviderError):
        dual_point(type_info("B3^1"), SigmaPoint(1, 0), 1)


def test_dual_point_examples():
    assert dual_point(A2, SigmaPoint(1, 0), 1) == SigmaPoint(2, 3)
    assert dual_point(A2, SigmaPoint(1, 2), 1) == SigmaPoint(2, 5)
    assert dual_point(A2, SigmaPoint(2, 1), 0) == SigmaPoint(2, 1)


def test_dual_point_inverse_and_parity():
    for k in range(-4, 5):
        for x in A2.sigma0_points(-6, 6):
            y = dual_point(A2, x, k)
            assert dual_point(A2, y, -k) == x
            assert A2.in_sigma0(y)


def test_denom_zeros_a_type():
    assert denom_zeros(A2, 1, 1) == (2,)
    assert denom_zeros(A2, 1, 2) == (3,)
    assert denom_zeros(type_info("A3^1"), 1, 3) == (4,)
    assert denom_zeros(type_info("A3^1"), 2, 2) == (2, 4)


def test_denom_zeros_no_provider():
    with pytest.raises(NoProviderError):
        denom_zeros(type_info("D4^1"), 1, 1)


def test_denominator_json_roundtrip():
    doc = json.dumps(
        {
            "type": "D4^1",
            "zeros": {"1,1": [2, 6], "1,2": [3, 5], "2,1": [3, 5], "2,2": [2, 4, 6]},
        }
    )
    info = load_denominator_json(doc)
    assert denom_zeros(info, 1, 1) == (2, 6)
    assert denom_zeros(info, 2, 2) == (2, 4, 6)
    assert denom_zeros(info, 3, 4) == ()
    affine._EXTERNAL_TABLES.pop("D4^1")


def test_sigma0_parity_a_type():
    points = A2.sigma0_points(0, 3)
    assert points == (
        SigmaPoint(1, 0),
        SigmaPoint(2, 1),
        SigmaPoint(1, 2),
        SigmaPoint(2, 3),
    )
    assert not A2.in_sigma0(SigmaPoint(1, 1))


def test_sigma_quiver_a2_window():
    vertices, arrows = sigma_quiver(A2, 0, 3)
    assert set(vertices) == {
        SigmaPoint(1, 0),
        SigmaPoint(2, 1),
        SigmaPoint(1, 2),
        SigmaPoint(2, 3),
    }
    arrow_set = {(a, b) for a, b, _ in arrows}
    assert arrow_set == {
        (SigmaPoint(1, 0), SigmaPoint(1, 2)),
        (SigmaPoint(1, 0), SigmaPoint(2, 3)),
        (SigmaPoint(2, 1), SigmaPoint(2, 3)),
    }
    assert all(mult == 1 for _, _, mult in arrows)


def test_sigma_quiver_a1_window():
    info = type_info("A1^1")
    vertices, arrows = sigma_quiver(info, 0, 2)
    assert vertices == (SigmaPoint(1, 0), SigmaPoint(1, 2))
    assert arrows == ((SigmaPoint(1, 0), SigmaPoint(1, 2), 1),)


def test_sigma_quiver_empty_window():
    assert sigma_quiver(A2, 3, 0) == ((), ())


def test_sigma_quiver_connected_on_wide_windows():
    for n in (1, 2, 3, 4):
        info = type_info(f"A{n}^1")
        h = info.dual_shift_exponent
        vertices, arrows = sigma_quiver(info, 0, 2 * h - 1)
        adj = {v: set() for v in vertices}
        for a, b, _ in arrows:
            adj[a].add(b)
            adj[b].add(a)
        seen = {vertices[0]}
        stack = [vertices[0]]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        assert seen == set(vertices), f"sigma0 quiver of A{n}^1 disconnected"


def test_all_registered_names_resolve():
    for name in affine.registered_names(6):
        info = type_info(name)
        assert info.rank >= 1
        for i in range(1, info.rank + 1):
            assert info.star(info.star(i)) == i


def test_d_counts_arrows_both_ways():
    from qaffpbw.invariants import d_fund

    vertices, arrows = sigma_quiver(A2, -3, 6)
    mult = {(a, b): m for a, b, m in arrows}
    for x in vertices:
        for y in vertices:
            assert d_fund(A2, x, y) == mult.get((x, y), 0) + mult.get((y, x), 0)
