"""Closed-form thresholds: frozen spot values, the packing/colouring duality,
Turán counts against a pair-by-pair oracle, and the branch-regime and
monotonicity facts."""

from math import comb

import pytest

from packlab import (
    ParameterRangeError,
    colouring_threshold,
    duality_check,
    first_branch_regime,
    matching_blocker_edges,
    matching_threshold,
    packing_threshold,
    second_branch_bound_decreasing,
    second_branch_lower_bound,
    turan_complement_edges,
    turan_edges,
)
from oracles import turan_edges_brute


def test_matching_blocker_edges_frozen():
    # h(n, d) = C(n-d-1, 2) + d(d+1)
    assert matching_blocker_edges(6, 0) == 10
    assert matching_blocker_edges(6, 1) == 8
    assert matching_blocker_edges(6, 2) == 9
    assert matching_blocker_edges(4, 1) == 3
    assert matching_blocker_edges(12, 3) == 40


def test_matching_threshold_frozen():
    tv = matching_threshold(6, 1)
    assert (tv.value, tv.branch) == (9, "second")
    tv = matching_threshold(6, 2)
    assert (tv.value, tv.branch) == (9, "tie")
    tv = matching_threshold(4, 1)
    assert (tv.value, tv.branch) == (3, "tie")
    with pytest.raises(ParameterRangeError):
        matching_threshold(6, 3)
    with pytest.raises(ParameterRangeError):
        matching_threshold(7, 1)
    with pytest.raises(ParameterRangeError):
        matching_threshold(6, 0)


def test_packing_threshold_frozen():
    assert packing_threshold(12, 3, 2).value == 56
    assert packing_threshold(6, 3, 2).value == 12
    assert packing_threshold(6, 3, 3).value == 12
    tv = packing_threshold(24, 3, 2)
    assert (tv.value, tv.branch) == (254, "second")
    with pytest.raises(ParameterRangeError):
        packing_threshold(12, 3, 1)
    with pytest.raises(ParameterRangeError):
        packing_threshold(12, 3, 8)
    with pytest.raises(ParameterRangeError):
        packing_threshold(12, 2, 3)


def test_colouring_threshold_frozen():
    tv = colouring_threshold(6, 3, 2)
    assert (tv.value, tv.branch) == (3, "first")
    tv = colouring_threshold(12, 3, 4)
    assert (tv.value, tv.branch) == (10, "first")
    tv = colouring_threshold(24, 3, 21)
    assert (tv.value, tv.branch) == (22, "second")
    with pytest.raises(ParameterRangeError):
        colouring_threshold(12, 3, 3)
    with pytest.raises(ParameterRangeError):
        colouring_threshold(12, 3, 10)


def test_turan_edges_oracle():
    for m in range(1, 26):
        for s in range(1, m + 1):
            assert turan_edges(m, s) == turan_edges_brute(m, s)
            assert turan_complement_edges(m, s) == comb(m, 2) - turan_edges(m, s)
    assert turan_edges(6, 3) == 12
    assert turan_edges(7, 3) == 16


def test_turan_edges_bounds():
    # (1 - 1/s) m^2 / 2 upper bound, exact when s | m
    for m in range(1, 201):
        for s in range(3, min(m, 12) + 1):
            e = turan_edges(m, s)
            assert 2 * e * s <= (s - 1) * m * m
            if m % s == 0:
                assert 2 * e * s == (s - 1) * m * m
            # one more vertex in the next part never decreases the count
            assert e >= turan_edges(m, s - 1)


def test_duality_identity():
    for r in range(3, 9):
        for n in range(2 * r, 121, r):
            for big_d in range(r - 1, (r - 1) * n // r):
                assert duality_check(n, r, big_d)
                g = packing_threshold(n, r, big_d).value
                f = colouring_threshold(n, r, n - 1 - big_d).value
                assert g + f == comb(n, 2)


def test_first_branch_regime_hypotheses():
    # r >= 3, n >= 2r: first branch throughout n/r <= D <= n/(r-1)
    for r in range(3, 11):
        for n in range(2 * r, 121, r):
            for big_d in range(n // r, n // (r - 1) + 1):
                assert first_branch_regime(n, r, big_d), (n, r, big_d)
    # spot values from the stated examples
    assert first_branch_regime(12, 4, 3)
    assert colouring_threshold(12, 4, 3).value == comb(4, 2)


def test_second_branch_lower_bound_values():
    # at x = 0 the bound is (n-1)^2 / (2(r-2)) - (n-1)/2
    for n, r in ((12, 3), (24, 4), (30, 5)):
        expect = (n - 1) ** 2 / (2 * (r - 2)) - (n - 1) / 2
        assert second_branch_lower_bound(n, r, 0.0) == pytest.approx(expect)
    # decreasing on the sampled grid
    assert second_branch_bound_decreasing(12, 3)
    assert second_branch_bound_decreasing(24, 4)
    with pytest.raises(ParameterRangeError):
        second_branch_lower_bound(12, 2, 0.0)


def test_threshold_value_branches_consistent():
    # branch labels name the attaining expression
    tv = matching_threshold(8, 1)
    h_first = matching_blocker_edges(8, 1)
    h_second = matching_blocker_edges(8, 3)
    assert tv.value == max(h_first, h_second)
    assert tv.branch == ("first" if h_first > h_second else "second")
