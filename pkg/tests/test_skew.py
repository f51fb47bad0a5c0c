"""Tests for the skew-variant closed forms, trinomial formulas, reversion."""

import pytest

from stanley_paths.oracle import State, dp_counts, enumerate_words
from stanley_paths.series import DomainError, polynomial
from stanley_paths.skew import (
    boundary_skew,
    even_part,
    level_gf_skew,
    r2_pow_coeff_skew,
    r2_skew,
    sum_level_slices_skew,
    total_prefix_skew,
    trinomial,
    v_series,
)
from stanley_paths.verify import (
    A002212_TAIL,
    Bounds,
    GOLDEN_TOTAL_SKEW,
    checks_for,
    run_check,
)


# --------------------------------------------------------------------- r2

def test_r2_low_coefficients():
    r2 = r2_skew(12)
    assert r2.integer_coefficients() == [0, 2, 0, 1, 0, 3, 0, 10, 0, 36, 0, 137]


def test_r2_odd_tail_is_a002212():
    r2 = r2_skew(24)
    assert [r2[2 * n + 1] for n in range(1, 12)] == list(A002212_TAIL)


def test_r2_even_coefficients_vanish():
    r2 = r2_skew(30)
    assert all(r2[2 * n] == 0 for n in range(15))


def test_r2_kernel_residual_vanishes():
    order = 60
    r2 = r2_skew(order)
    residual = (r2 * r2).shift(1) - r2 * polynomial([1, 0, 1], order) \
        + polynomial([0, 2, 0, -1], order)
    assert residual.is_zero()


# --------------------------------------------------------------- boundary

def test_boundary_h0_counts_smallest_paths():
    # [z^2] h0 = 1: the single path UD
    h0 = boundary_skew(8).h0
    assert h0[2] == 1
    assert h0[0] == h0[1] == 0


def test_boundary_k0_length_six():
    # two length-6 words end red on the axis: UUUDDR and UUUDRR
    # (descent runs DDR and DRR both have odd length 3)
    k0 = boundary_skew(8).k0
    assert k0[6] == 2
    enum = enumerate_words("skew", 6, list_mode=True)
    assert enum.words[State("K", 0)] == ["UUUDDR", "UUUDRR"]


def test_boundary_e1_vanishes_below_cube():
    e1 = boundary_skew(8).e1
    assert all(e1[n] == 0 for n in range(3))


def test_boundary_low_support_against_dp():
    b = boundary_skew(12)
    table = dp_counts("skew", 11)
    for series, state in [
        (b.e1, State("E", 1)),
        (b.f1, State("F", 1)),
        (b.h0, State("H", 0)),
        (b.k0, State("K", 0)),
    ]:
        for n in range(12):
            assert series[n] == table.count(n, state)


def test_boundary_order_precondition():
    with pytest.raises(DomainError):
        boundary_skew(5)


# ------------------------------------------------------------- level slices

def test_level_g0_is_one():
    series = level_gf_skew("G", 0, 8).series
    assert series.integer_coefficients() == [1, 0, 0, 0, 0, 0, 0, 0]


def test_level_h0_matches_boundary():
    assert level_gf_skew("H", 0, 14).series == boundary_skew(14).h0


def test_level_k1_at_z5_matches_dp():
    table = dp_counts("skew", 5)
    series = level_gf_skew("K", 1, 6).series
    assert series[5] == table.count(5, State("K", 1)) == 1


def test_level_e0_f0_do_not_exist():
    with pytest.raises(DomainError):
        level_gf_skew("E", 0, 8)
    with pytest.raises(DomainError):
        level_gf_skew("F", 0, 8)


@pytest.mark.parametrize("layer", ["E", "F", "G", "H", "K"])
@pytest.mark.parametrize("level", [0, 1, 2, 3, 5, 8])
def test_level_slices_equal_dp_counts(layer, level):
    if layer in ("E", "F") and level == 0:
        pytest.skip("no such state")
    table = dp_counts("skew", 20)
    series = level_gf_skew(layer, level, 21).series
    for n in range(21):
        assert series[n] == table.count(n, State(layer, level))


def test_even_levels_pair_up():
    # the recursions force f_j = e_j at even levels and h_j = k_j at odd ones
    assert level_gf_skew("E", 4, 20).series == level_gf_skew("F", 4, 20).series
    assert level_gf_skew("H", 3, 20).series == level_gf_skew("K", 3, 20).series


# ------------------------------------------------------------------ totals

def test_total_first_ten_coefficients():
    total = total_prefix_skew(10)
    assert total.integer_coefficients() == list(GOLDEN_TOTAL_SKEW)


def test_total_equals_slice_sum():
    assert total_prefix_skew(18) == sum_level_slices_skew(18)


def test_total_z12_matches_dp_row_sum():
    total = total_prefix_skew(14)
    assert total[12] == dp_counts("skew", 12).total(12)


# -------------------------------------------------------------- trinomials

def test_trinomial_base_cases():
    assert trinomial(0, 0) == 1
    assert trinomial(0, 3) == 0
    assert trinomial(0, -1) == 0
    assert trinomial(1, 1) == 3


def test_trinomial_square_row():
    # (1 + 3t + t^2)^2 = 1 + 6t + 11t^2 + 6t^3 + t^4, squared by hand
    assert [trinomial(2, k) for k in range(5)] == [1, 6, 11, 6, 1]


def test_trinomial_against_series_power():
    order = 17
    base = polynomial([1, 3, 1], order)
    for n in range(9):
        power = base ** n
        for k in range(order):
            assert trinomial(n, k) == power[k]


# ------------------------------------------------------- coefficient formula

def test_pow_coeff_tail_values():
    assert [r2_pow_coeff_skew(1, n) for n in range(1, 6)] == [1, 3, 10, 36, 137]


def test_pow_coeff_constant_terms():
    assert r2_pow_coeff_skew(1, 0) == 2
    assert r2_pow_coeff_skew(3, 0) == 8


def test_pow_coeff_square():
    # (2 + Z + 3Z^2 + ...)^2 = 4 + 4Z + ...
    assert r2_pow_coeff_skew(2, 1) == 4


def test_pow_coeff_matches_series_powers():
    order = 2 * 20 + 2
    ratio = r2_skew(order).shift(-1)
    power = ratio
    for ell in range(1, 9):
        if ell > 1:
            power = power * ratio
        for n in range(21):
            assert r2_pow_coeff_skew(ell, n) == power[2 * n]


# ---------------------------------------------------- reversion substitution

def test_v_series_low_coefficients():
    # v = Z + 3Z^2 + 10Z^3 + ... : same tail as the kernel root
    v = v_series(6)
    assert v.integer_coefficients() == [0, 1, 3, 10, 36, 137]


def test_reversion_matches_kernel_root():
    ratio = even_part(r2_skew(41).shift(-1))
    assert ratio.order == 20
    assert 2 + v_series(20) == ratio


def test_even_part_rejects_odd_terms():
    with pytest.raises(DomainError):
        even_part(polynomial([0, 1], 4))


# ------------------------------------------------------- recursion closure

def test_recursion_closure_holds():
    check = next(c for c in checks_for("skew") if c.name == "skew.recursion-closure")
    result = run_check(check, Bounds(closure_index=8, closure_order=36))
    assert result.passed, result.mismatches[:3]


def test_level_series_are_counting_series():
    for layer in "EFGHK":
        for level in range(0 if layer not in "EF" else 1, 7):
            series = level_gf_skew(layer, level, 25).series
            assert series.is_integral()
            assert all(c >= 0 for c in series.coefficients)
