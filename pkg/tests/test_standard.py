"""Tests for the standard-variant closed forms and coefficient formulas."""

import pytest

from stanley_paths.oracle import State, dp_counts
from stanley_paths.series import DomainError, polynomial
from stanley_paths.standard import (
    boundary_std,
    level_gf_std,
    r2_pow_coeff_std,
    r2_std,
    sum_level_slices_std,
    total_prefix_std,
)
from stanley_paths.verify import (
    Bounds,
    GOLDEN_TOTAL_STD,
    catalan_numbers,
    checks_for,
    run_check,
)

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012]


def test_catalan_oracle_matches_frozen_list():
    assert catalan_numbers(13) == CATALAN


# --------------------------------------------------------------------- r2

def test_r2_odd_coefficients_are_catalan():
    r2 = r2_std(12)
    assert [r2[2 * n + 1] for n in range(5)] == [1, 1, 2, 5, 14]


def test_r2_even_coefficients_vanish():
    r2 = r2_std(30)
    assert all(r2[2 * n] == 0 for n in range(15))


def test_r2_kernel_residual_vanishes():
    order = 60
    r2 = r2_std(order)
    residual = (r2 * r2).shift(1) - r2 + polynomial([0, 1], order)
    assert residual.is_zero()


def test_r2_order_precondition():
    with pytest.raises(DomainError):
        r2_std(1)


# --------------------------------------------------------------- boundary

def test_boundary_h0_series():
    h0 = boundary_std(12).h0
    assert h0.integer_coefficients() == [0, 0, 1, 0, 1, 0, 2, 0, 5, 0, 14, 0]


def test_boundary_f1_series():
    f1 = boundary_std(9).f1
    assert f1.integer_coefficients() == [0, 0, 0, 1, 0, 2, 0, 5, 0]


def test_boundary_f1_vanishes_below_cube():
    f1 = boundary_std(8).f1
    assert f1[0] == f1[1] == f1[2] == 0


# ------------------------------------------------------------- level slices

def test_level_g0_is_one():
    series = level_gf_std("G", 0, 8).series
    assert series.integer_coefficients() == [1, 0, 0, 0, 0, 0, 0, 0]


def test_level_h0_matches_boundary():
    assert level_gf_std("H", 0, 16).series == boundary_std(16).h0


def test_level_f1_matches_boundary():
    # the kernel identity z*r2^2 = r2 - z makes the two routes coincide
    assert level_gf_std("F", 1, 16).series == boundary_std(16).f1


def test_level_f0_does_not_exist():
    with pytest.raises(DomainError):
        level_gf_std("F", 0, 8)


@pytest.mark.parametrize("layer", ["F", "G", "H"])
@pytest.mark.parametrize("level", [0, 1, 2, 3, 5, 8])
def test_level_slices_equal_dp_counts(layer, level):
    if layer == "F" and level == 0:
        pytest.skip("no such state")
    table = dp_counts("std", 20)
    series = level_gf_std(layer, level, 21).series
    for n in range(21):
        assert series[n] == table.count(n, State(layer, level))


# ------------------------------------------------------------------ totals

def test_total_first_twelve_coefficients():
    total = total_prefix_std(12)
    assert total.integer_coefficients() == list(GOLDEN_TOTAL_STD)


def test_total_equals_slice_sum():
    assert total_prefix_std(20) == sum_level_slices_std(20)


def test_total_z14_matches_dp_row_sum():
    total = total_prefix_std(16)
    assert total[14] == dp_counts("std", 14).total(14)


# ------------------------------------------------------- coefficient formula

def test_pow_coeff_low_values():
    assert r2_pow_coeff_std(1, 2) == 2  # Catalan C_2
    assert r2_pow_coeff_std(2, 1) == 2  # [z^4] of r2^2
    assert r2_pow_coeff_std(5, 0) == 1  # leading coefficient of any power


def test_pow_coeff_matches_series_powers():
    order = 10 + 2 * 25 + 1
    r2 = r2_std(order)
    power = r2
    for j in range(1, 11):
        if j > 1:
            power = power * r2
        for n in range(26):
            assert r2_pow_coeff_std(j, n) == power[j + 2 * n]


def test_pow_coeff_preconditions():
    with pytest.raises(DomainError):
        r2_pow_coeff_std(0, 1)
    with pytest.raises(DomainError):
        r2_pow_coeff_std(1, -1)


# ------------------------------------------------------- recursion closure

def test_recursion_closure_holds():
    check = next(c for c in checks_for("std") if c.name == "std.recursion-closure")
    result = run_check(check, Bounds(closure_index=10, closure_order=40))
    assert result.passed, result.mismatches[:3]


def test_level_series_are_counting_series():
    for layer in "FGH":
        for level in range(0 if layer != "F" else 1, 7):
            series = level_gf_std(layer, level, 25).series
            assert series.is_integral()
            assert all(c >= 0 for c in series.coefficients)
