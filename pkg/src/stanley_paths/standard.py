"""Closed forms for prefixes of Dyck paths with odd returns to the x-axis.

Prefixes are words over up-steps and down-steps, never dipping below the
x-axis, in which every maximal descent run that reaches the axis has odd
length.  They are tracked by a three-layer state graph: layer G after an
up-step, layers F and H during descents whose completed return to the axis
would be even resp. odd.  The per-layer, per-level counting series all
reduce to powers of a single algebraic series r2, the power-series root of

    z*s**2 - s + z = 0,

whose odd coefficients are the Catalan numbers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .series import DomainError, TruncatedSeries, one, polynomial

LAYERS_STD = ("F", "G", "H")


def _discriminant_root(order: int) -> TruncatedSeries:
    # sqrt(1 - 4z^2) = 1 - 2z^2 - 2z^4 - 4z^6 - ...
    return polynomial([1, 0, -4], order).sqrt()


@lru_cache(maxsize=None)
def r2_std(order: int) -> TruncatedSeries:
    """The root (1 - sqrt(1 - 4z^2)) / (2z) = z + z^3 + 2z^5 + 5z^7 + ...

    Satisfies z*r2**2 - r2 + z = 0; the coefficient of z^(2n+1) is the
    Catalan number C_n.
    """
    if order < 2:
        raise DomainError("r2_std needs order >= 2")
    root = _discriminant_root(order + 1)
    return (1 - root).shift(-1) / 2


@dataclass(frozen=True)
class StdBoundary:
    """The two boundary series pinned down by the kernel step."""

    f1: TruncatedSeries
    h0: TruncatedSeries


@lru_cache(maxsize=None)
def boundary_std(order: int) -> StdBoundary:
    """Boundary series f1 = r2 - z and h0 = z*r2.

    Each is computed twice, once from its radical expression and once from
    the algebraic shortcut, and the two routes must agree exactly.
    """
    if order < 4:
        raise DomainError("boundary_std needs order >= 4")
    r2 = r2_std(order)
    f1 = r2 - polynomial([0, 1], order)
    h0 = r2.shift(1)

    root = _discriminant_root(order + 1)
    f1_radical = (polynomial([1, 0, -2], order + 1) - root).shift(-1) / 2
    h0_radical = (1 - root.truncate(order)) / 2
    if f1 != f1_radical or h0 != h0_radical:
        raise ArithmeticError("radical and algebraic boundary routes disagree")
    return StdBoundary(f1=f1, h0=h0)


@dataclass(frozen=True)
class StdLevelGF:
    """Counting series for prefixes ending at one state (layer, level)."""

    layer: str
    level: int
    series: TruncatedSeries


def _slice_std(layer: str, j: int, power: Callable[[int], TruncatedSeries],
               order: int) -> TruncatedSeries:
    # power(k) must return r2**k at the requested order.
    if layer == "F":
        if j < 1:
            raise DomainError("layer F has no level-0 state")
        return power(j + 1).shift(1) if j % 2 else power(j + 2).shift(2)
    if layer == "G":
        return one(order) if j == 0 else power(j) - power(j + 2).shift(2)
    if layer == "H":
        return power(j + 2).shift(2) if j % 2 else power(j + 1).shift(1)
    raise DomainError(f"unknown standard layer {layer!r}")


def _check_counting_series(series: TruncatedSeries, what: str) -> None:
    for n, c in enumerate(series.coefficients):
        if c.denominator != 1 or c < 0:
            raise ArithmeticError(f"{what}: coefficient of z^{n} is {c}")


@lru_cache(maxsize=None)
def level_gf_std(layer: str, level: int, order: int) -> StdLevelGF:
    """The series counting prefixes that end at (layer, level).

    f_j = z*r2^(j+1) for odd j and z^2*r2^(j+2) for even j >= 2;
    g_0 = 1 and g_j = r2^j - z^2*r2^(j+2);
    h_j = z*r2^(j+1) for even j and z^2*r2^(j+2) for odd j.
    """
    if level < 0:
        raise DomainError("level must be non-negative")
    if order < 2:
        raise DomainError("level_gf_std needs order >= 2")
    r2 = r2_std(order)
    series = _slice_std(layer, level, lambda k: r2 ** k, order)
    _check_counting_series(series, f"level series {layer}{level}")
    return StdLevelGF(layer=layer, level=level, series=series)


@lru_cache(maxsize=None)
def sum_level_slices_std(order: int) -> TruncatedSeries:
    """Sum of every level series over all layers and levels below the order.

    Levels >= order cannot contribute (a path needs at least j steps to reach
    level j), so the cut-off is exact.
    """
    r2 = r2_std(order)
    total = one(order) + r2.shift(1)  # g_0 = 1 and h_0 = z*r2; f_0 does not exist
    pow_j1 = r2            # r2^(j+1) for j = 0
    pow_j2 = r2 * r2       # r2^(j+2) for j = 0
    for j in range(1, order):
        pow_j, pow_j1, pow_j2 = pow_j1, pow_j2, pow_j2 * r2
        low = pow_j1.shift(1)   # z*r2^(j+1)
        high = pow_j2.shift(2)  # z^2*r2^(j+2)
        f_j = low if j % 2 else high
        g_j = pow_j - high
        h_j = high if j % 2 else low
        total = total + f_j + g_j + h_j
    return total


@lru_cache(maxsize=None)
def total_prefix_std(order: int) -> TruncatedSeries:
    """Counting series of all prefixes, regardless of where they end.

    Closed form (1-z)/2 + (1+z)/(2*(1-2z)) * sqrt(1-4z^2), cross-checked
    against the sum of all level series on every call.
    """
    if order < 2:
        raise DomainError("total_prefix_std needs order >= 2")
    root = _discriminant_root(order)
    closed = polynomial([1, -1], order) / 2 \
        + polynomial([1, 1], order) / (polynomial([1, -2], order) * 2) * root
    if closed != sum_level_slices_std(order):
        raise ArithmeticError("closed-form total disagrees with the level-series sum")
    return closed


def r2_pow_coeff_std(j: int, n: int) -> int:
    """Coefficient of z^(j+2n) in r2**j: j*(2n+j-1)! / (n!*(n+j)!)."""
    if j < 1 or n < 0:
        raise DomainError("r2_pow_coeff_std needs j >= 1 and n >= 0")
    num = j * math.factorial(2 * n + j - 1)
    den = math.factorial(n) * math.factorial(n + j)
    value, remainder = divmod(num, den)
    if remainder:
        raise ArithmeticError(f"non-integer power coefficient at j={j}, n={n}")
    return value
