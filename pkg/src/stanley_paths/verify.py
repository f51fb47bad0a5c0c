"""Cross-verification of the three computation routes.

Each check compares two independently computed integer sequences coefficient
by coefficient and reports every disagreement with the key of the offending
coefficient.  A :class:`Fault` can be injected to perturb a single value on
the left-hand side of a named comparison; with the suite green, any injected
fault must surface as a mismatch.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .oracle import State, dp_counts, enumerate_words, state_sort_key
from .series import TruncatedSeries, one, polynomial, zero
from .skew import (
    LAYERS_SKEW,
    boundary_skew,
    even_part,
    level_gf_skew,
    r2_pow_coeff_skew,
    r2_skew,
    sum_level_slices_skew,
    total_prefix_skew,
    v_series,
)
from .standard import (
    LAYERS_STD,
    boundary_std,
    level_gf_std,
    r2_pow_coeff_std,
    r2_std,
    sum_level_slices_std,
    total_prefix_std,
)

GOLDEN_TOTAL_STD = (1, 1, 2, 3, 5, 9, 16, 30, 55, 105, 196, 378)
GOLDEN_TOTAL_SKEW = (1, 1, 2, 3, 5, 10, 20, 38, 75, 150)
# OEIS A002212: odd-index tail of the skew kernel root, starting at z^3.
A002212_TAIL = (1, 3, 10, 36, 137, 543, 2219, 9285, 39587, 171369, 751236)


def catalan_numbers(count: int) -> list[int]:
    """C_0..C_{count-1} by the convolution recurrence, nothing else."""
    cats = [1]
    for n in range(count - 1):
        cats.append(sum(cats[k] * cats[n - k] for k in range(n + 1)))
    return cats


@dataclass(frozen=True)
class Bounds:
    """Effort knobs for the adjustable checks; the rest are pinned constants."""

    order: int = 64          # truncation for kernel/total/integrality checks
    max_len: int = 14        # exhaustive enumeration vs DP
    slice_len: int = 30      # coefficient range for slice-vs-DP
    max_level: int = 10      # level range for slice-vs-DP
    pow_j: int = 10          # standard factorial formula: powers
    pow_n: int = 25          # standard factorial formula: coefficients
    pow_l: int = 8           # skew trinomial formula: powers
    pow_nz: int = 20         # skew trinomial formula: coefficients (in Z)
    closure_index: int = 10  # recursion closure: levels
    closure_order: int = 40  # recursion closure: truncation
    reversion_order: int = 20
    dp_total_len: int = 40   # totals vs DP row sums


Record = tuple[str, object, object]


@dataclass(frozen=True)
class Fault:
    """Perturb the left value of one named comparison by +1."""

    check: str
    key: str


@dataclass(frozen=True)
class Check:
    name: str
    lhs_label: str
    rhs_label: str
    run: Callable[[Bounds], Iterator[Record]]


@dataclass(frozen=True)
class Mismatch:
    key: str
    lhs: object
    rhs: object


@dataclass(frozen=True)
class CheckResult:
    name: str
    lhs_label: str
    rhs_label: str
    comparisons: int
    mismatches: tuple[Mismatch, ...]

    @property
    def passed(self) -> bool:
        return not self.mismatches


# --------------------------------------------------------------- primitives

def _z(order: int) -> TruncatedSeries:
    return polynomial([0, 1], order)


def _series_records(tag: str, lhs: TruncatedSeries, rhs: TruncatedSeries,
                    upto: int | None = None) -> Iterator[Record]:
    n_max = min(lhs.order, rhs.order) if upto is None else upto
    for n in range(n_max):
        yield f"{tag}z^{n}", lhs[n], rhs[n]


def _level_series(variant: str, layer: str, level: int, order: int) -> TruncatedSeries:
    if variant == "std":
        return level_gf_std(layer, level, order).series
    return level_gf_skew(layer, level, order).series


def _layers(variant: str) -> tuple[str, ...]:
    return LAYERS_STD if variant == "std" else LAYERS_SKEW


def _min_level(layer: str) -> int:
    return 1 if layer in ("E", "F") else 0


# ------------------------------------------------------------------- checks

def _kernel_residual(variant: str) -> Callable[[Bounds], Iterator[Record]]:
    def run(bounds: Bounds) -> Iterator[Record]:
        order = 60
        if variant == "std":
            r2 = r2_std(order)
            residual = (r2 * r2).shift(1) - r2 + _z(order)
        else:
            r2 = r2_skew(order)
            residual = (r2 * r2).shift(1) - r2 * polynomial([1, 0, 1], order) \
                + polynomial([0, 2, 0, -1], order)
        yield from _series_records("", residual, zero(order))
    return run


def _catalan_h0(bounds: Bounds) -> Iterator[Record]:
    n_max = 12
    h0 = boundary_std(2 * n_max + 3).h0
    cats = catalan_numbers(n_max + 1)
    for n in range(n_max + 1):
        yield f"n={n}", h0[2 * n + 2], cats[n]


def _golden_total(variant: str) -> Callable[[Bounds], Iterator[Record]]:
    def run(bounds: Bounds) -> Iterator[Record]:
        golden = GOLDEN_TOTAL_STD if variant == "std" else GOLDEN_TOTAL_SKEW
        total = total_prefix_std(len(golden)) if variant == "std" \
            else total_prefix_skew(len(golden))
        for n, value in enumerate(golden):
            yield f"z^{n}", total[n], value
    return run


def _golden_a2212(bounds: Bounds) -> Iterator[Record]:
    r2 = r2_skew(2 * len(A002212_TAIL) + 2)
    for n, value in enumerate(A002212_TAIL, start=1):
        yield f"z^{2 * n + 1}", r2[2 * n + 1], value


def _total_vs_slices(variant: str) -> Callable[[Bounds], Iterator[Record]]:
    def run(bounds: Bounds) -> Iterator[Record]:
        if variant == "std":
            closed = total_prefix_std(bounds.order)
            summed = sum_level_slices_std(bounds.order)
        else:
            closed = total_prefix_skew(bounds.order)
            summed = sum_level_slices_skew(bounds.order)
        yield from _series_records("", closed, summed)
    return run


def _total_vs_dp(variant: str) -> Callable[[Bounds], Iterator[Record]]:
    def run(bounds: Bounds) -> Iterator[Record]:
        n_max = min(bounds.order - 1, bounds.dp_total_len)
        total = total_prefix_std(bounds.order) if variant == "std" \
            else total_prefix_skew(bounds.order)
        table = dp_counts(variant, n_max)
        for n in range(n_max + 1):
            yield f"z^{n}", total[n], table.total(n)
    return run


def _slices_vs_dp(variant: str) -> Callable[[Bounds], Iterator[Record]]:
    def run(bounds: Bounds) -> Iterator[Record]:
        order = bounds.slice_len + 1
        table = dp_counts(variant, bounds.slice_len)
        for layer in _layers(variant):
            for j in range(_min_level(layer), bounds.max_level + 1):
                series = _level_series(variant, layer, j, order)
                for n in range(bounds.slice_len + 1):
                    yield (
                        f"{layer}{j}@z^{n}",
                        series[n],
                        table.count(n, State(layer, j)),
                    )
    return run


def _boundary_vs_slices(variant: str) -> Callable[[Bounds], Iterator[Record]]:
    def run(bounds: Bounds) -> Iterator[Record]:
        order = 40
        if variant == "std":
            named = [("f1", boundary_std(order).f1, ("F", 1)),
                     ("h0", boundary_std(order).h0, ("H", 0))]
        else:
            b = boundary_skew(order)
            named = [("e1", b.e1, ("E", 1)), ("f1", b.f1, ("F", 1)),
                     ("h0", b.h0, ("H", 0)), ("k0", b.k0, ("K", 0))]
        for name, series, (layer, level) in named:
            slice_series = _level_series(variant, layer, level, order)
            yield from _series_records(f"{name}@", series, slice_series)
        yield from _series_records(
            "g0@", _level_series(variant, "G", 0, order), one(order)
        )
    return run


def _powcoeff_std(bounds: Bounds) -> Iterator[Record]:
    order = bounds.pow_j + 2 * bounds.pow_n + 1
    r2 = r2_std(order)
    power = one(order)
    for j in range(1, bounds.pow_j + 1):
        power = power * r2
        for n in range(bounds.pow_n + 1):
            yield f"j={j},n={n}", r2_pow_coeff_std(j, n), power[j + 2 * n]


def _powcoeff_skew(bounds: Bounds) -> Iterator[Record]:
    order = 2 * bounds.pow_nz + 2
    ratio = r2_skew(order).shift(-1)  # r2/z, an even series
    power = one(ratio.order)
    for ell in range(1, bounds.pow_l + 1):
        power = power * ratio
        for n in range(bounds.pow_nz + 1):
            yield f"l={ell},n={n}", r2_pow_coeff_skew(ell, n), power[2 * n]


def _closure_std(bounds: Bounds) -> Iterator[Record]:
    order = bounds.closure_order
    top = bounds.closure_index

    def f(i: int) -> TruncatedSeries:
        return _level_series("std", "F", i, order) if i >= 1 else zero(order)

    def g(i: int) -> TruncatedSeries:
        return _level_series("std", "G", i, order)

    def h(i: int) -> TruncatedSeries:
        return _level_series("std", "H", i, order)

    for i in range(1, top + 1):
        rhs = f(i + 1).shift(1)
        if i % 2:
            rhs = rhs + g(i + 1).shift(1)
        yield from _series_records(f"f{i}@", f(i), rhs)
    for i in range(top + 1):
        rhs = h(i + 1).shift(1)
        if i % 2 == 0:
            rhs = rhs + g(i + 1).shift(1)
        yield from _series_records(f"h{i}@", h(i), rhs)
    for i in range(top + 1):
        rhs = f(i).shift(1) + g(i).shift(1) + h(i).shift(1)
        yield from _series_records(f"g{i + 1}@", g(i + 1), rhs)


def _closure_skew(bounds: Bounds) -> Iterator[Record]:
    order = bounds.closure_order
    top = bounds.closure_index

    def sl(layer: str, i: int) -> TruncatedSeries:
        if layer in ("E", "F") and i < 1:
            return zero(order)
        return _level_series("skew", layer, i, order)

    for i in range(1, top + 1):
        rhs = sl("E", i + 1).shift(1) + sl("F", i + 1).shift(1)
        yield from _series_records(f"e{i}@", sl("E", i), rhs)
    for i in range(1, top + 1):
        rhs = sl("E", i + 1).shift(1) + sl("F", i + 1).shift(1)
        if i % 2:
            rhs = rhs + sl("G", i + 1).shift(1)
        yield from _series_records(f"f{i}@", sl("F", i), rhs)
    for i in range(top + 1):
        rhs = sl("F", i).shift(1) + sl("G", i).shift(1) + sl("H", i).shift(1)
        yield from _series_records(f"g{i + 1}@", sl("G", i + 1), rhs)
    for i in range(top + 1):
        rhs = sl("H", i + 1).shift(1) + sl("K", i + 1).shift(1)
        if i % 2 == 0:
            rhs = rhs + sl("G", i + 1).shift(1)
        yield from _series_records(f"h{i}@", sl("H", i), rhs)
    for i in range(top + 1):
        rhs = sl("H", i + 1).shift(1) + sl("K", i + 1).shift(1)
        yield from _series_records(f"k{i}@", sl("K", i), rhs)


def _dp_vs_exhaustive(variant: str) -> Callable[[Bounds], Iterator[Record]]:
    def run(bounds: Bounds) -> Iterator[Record]:
        table = dp_counts(variant, bounds.max_len)
        for n in range(bounds.max_len + 1):
            enum = enumerate_words(variant, n, cap=bounds.max_len)
            states = sorted(
                set(enum.counts) | set(table.row(n)), key=state_sort_key
            )
            for state in states:
                yield (
                    f"n={n},{state.layer}:{state.level}",
                    enum.counts.get(state, 0),
                    table.count(n, state),
                )
    return run


def _reversion_substitution(bounds: Bounds) -> Iterator[Record]:
    ratio = even_part(r2_skew(2 * bounds.reversion_order + 1).shift(-1))
    shifted = 2 + v_series(ratio.order)
    for n in range(ratio.order):
        yield f"Z^{n}", shifted[n], ratio[n]


def _integrality(variant: str) -> Callable[[Bounds], Iterator[Record]]:
    def run(bounds: Bounds) -> Iterator[Record]:
        order = bounds.order
        if variant == "std":
            b = boundary_std(order)
            named = [("r2", r2_std(order)), ("f1", b.f1), ("h0", b.h0),
                     ("total", total_prefix_std(order))]
        else:
            b = boundary_skew(order)
            named = [("r2", r2_skew(order)), ("e1", b.e1), ("f1", b.f1),
                     ("h0", b.h0), ("k0", b.k0),
                     ("total", total_prefix_skew(order))]
        for name, series in named:
            for n, c in enumerate(series.coefficients):
                yield f"{name}@z^{n}", c.denominator, 1
    return run


# ----------------------------------------------------------------- registry

def checks_for(variant: str) -> list[Check]:
    if variant not in ("std", "skew"):
        raise ValueError(f"unknown variant {variant!r}")
    prefix = variant
    shared = [
        Check(f"{prefix}.kernel-residual", "residual", "zero",
              _kernel_residual(variant)),
        Check(f"{prefix}.golden-total", "closed-form", "golden",
              _golden_total(variant)),
        Check(f"{prefix}.total-vs-slices", "closed-form", "slice-sum",
              _total_vs_slices(variant)),
        Check(f"{prefix}.total-vs-dp", "closed-form", "dp",
              _total_vs_dp(variant)),
        Check(f"{prefix}.slices-vs-dp", "closed-form", "dp",
              _slices_vs_dp(variant)),
        Check(f"{prefix}.boundary-vs-slices", "boundary", "slice",
              _boundary_vs_slices(variant)),
        Check(f"{prefix}.dp-vs-exhaustive", "enumeration", "dp",
              _dp_vs_exhaustive(variant)),
        Check(f"{prefix}.integrality", "denominator", "one",
              _integrality(variant)),
    ]
    if variant == "std":
        shared += [
            Check("std.catalan-h0", "series", "recurrence", _catalan_h0),
            Check("std.powcoeff-formula", "formula", "series", _powcoeff_std),
            Check("std.recursion-closure", "slice", "recursion", _closure_std),
        ]
    else:
        shared += [
            Check("skew.golden-a2212", "series", "golden", _golden_a2212),
            Check("skew.powcoeff-formula", "formula", "series", _powcoeff_skew),
            Check("skew.recursion-closure", "slice", "recursion", _closure_skew),
            Check("skew.reversion-substitution", "2+v", "series",
                  _reversion_substitution),
        ]
    return sorted(shared, key=lambda c: c.name)


def run_check(check: Check, bounds: Bounds, fault: Fault | None = None) -> CheckResult:
    comparisons = 0
    mismatches: list[Mismatch] = []
    for key, lhs, rhs in check.run(bounds):
        comparisons += 1
        if fault is not None and fault.check == check.name and fault.key == key:
            lhs = lhs + 1
        if lhs != rhs:
            mismatches.append(Mismatch(key=key, lhs=lhs, rhs=rhs))
    return CheckResult(
        name=check.name,
        lhs_label=check.lhs_label,
        rhs_label=check.rhs_label,
        comparisons=comparisons,
        mismatches=tuple(mismatches),
    )


def run_checks(
    variants: Iterable[str],
    bounds: Bounds | None = None,
    fault: Fault | None = None,
) -> list[CheckResult]:
    """Run every check for the given variants, sorted by check name."""
    bounds = bounds or Bounds()
    all_checks: list[Check] = []
    for variant in variants:
        all_checks.extend(checks_for(variant))
    all_checks.sort(key=lambda c: c.name)
    return [run_check(check, bounds, fault) for check in all_checks]
