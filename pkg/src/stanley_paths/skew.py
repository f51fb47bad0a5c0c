"""Closed forms for the skew variant of odd-return Dyck-path prefixes.

Skew paths add a second kind of down-step, drawn red, with two adjacency
bans: an up-step may not directly follow a red step and vice versa.  The
state graph grows to five layers: E and K are the "last step was red"
companions of F and H, and the G layer is reachable by up-steps only from
F, G and H.  The kernel root here is

    r2 = (1 + z^2 - sqrt(1 - 6z^2 + 5z^4)) / (2z) = 2z + z^3 + 3z^5 + ...

whose odd tail 1, 3, 10, 36, 137, ... is OEIS A002212.

All five level families admit closed slices built from three derived series:

    rho   = r2 / (2 - z^2)            per-level ratio of the G layer
    gamma = (1 + 3z^2 - z*r2)/(1+z^2) level weight of the G layer
    q     = rho^2                     per-two-levels ratio of E, F, H, K

with g_k = gamma*rho^k, and E, F, H, K of the shape (A + B*u)/(1 - q*u^2)
in the level-marking variable u, where

    e1 + f1 = z*gamma*rho^2 / (1 - 4z^2*rho^2)
    h0 + k0 = z*gamma*rho   / (1 - 4z^2*rho^2)
    E(u) = z*(e1+f1)*rho^2*(u + 2z)/(1 - q*u^2),  F = E + z*gamma*rho^2/(1 - q*u^2)
    K(u) = z*(h0+k0)*rho^2*(u + 2z)/(1 - q*u^2),  H = K + z*gamma*rho  /(1 - q*u^2).

These forms reproduce the boundary series (the u = 0 values) exactly and are
verified coefficient-by-coefficient against the state-graph counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, NamedTuple

from .series import (
    DomainError,
    TruncatedSeries,
    one,
    polynomial,
    zero,
)

LAYERS_SKEW = ("E", "F", "G", "H", "K")


def _discriminant_root(order: int) -> TruncatedSeries:
    # sqrt(1 - 6z^2 + 5z^4) = 1 - 3z^2 - 2z^4 - 6z^6 - ...
    return polynomial([1, 0, -6, 0, 5], order).sqrt()


@lru_cache(maxsize=None)
def r2_skew(order: int) -> TruncatedSeries:
    """Power-series root of z*s^2 - (1+z^2)*s + 2z - z^3 = 0 with s = 2z + O(z^3)."""
    if order < 2:
        raise DomainError("r2_skew needs order >= 2")
    root = _discriminant_root(order + 1)
    return (polynomial([1, 0, 1], order + 1) - root).shift(-1) / 2


@dataclass(frozen=True)
class SkewBoundary:
    """The four boundary series pinned down by the kernel step."""

    e1: TruncatedSeries
    f1: TruncatedSeries
    h0: TruncatedSeries
    k0: TruncatedSeries


@lru_cache(maxsize=None)
def boundary_skew(order: int) -> SkewBoundary:
    """Boundary series as rational expressions in z and r2.

    The denominators (1+z^2) and (2-z^2) are units, so plain series division
    applies throughout.
    """
    if order < 6:
        raise DomainError("boundary_skew needs order >= 6")
    r2 = r2_skew(order)

    def p(*coeffs: int) -> TruncatedSeries:
        return polynomial(coeffs, order)

    unit_a = p(1, 0, 1)   # 1 + z^2
    unit_b = p(2, 0, -1)  # 2 - z^2
    den_sq = unit_a * unit_b * unit_b
    den = unit_a * unit_b

    e1 = (p(0, -4, 0, 6, 0, -2) + 2 * r2 - 4 * r2.shift(2)) / den_sq
    f1 = (p(0, -4, 0, 2) + 2 * r2 + r2.shift(4)) / den_sq
    h0 = (p(0, 0, -2, 0, 1) + 2 * r2.shift(1)) / den
    k0 = (p(0, 0, -4, 0, 2) + 2 * r2.shift(1) - 2 * r2.shift(3)) / den
    for name, series in (("e1", e1), ("f1", f1), ("h0", h0), ("k0", k0)):
        _check_counting_series(series, f"boundary {name}")
    return SkewBoundary(e1=e1, f1=f1, h0=h0, k0=k0)


class _Pieces(NamedTuple):
    """Shared building blocks of the five level families."""

    rho: TruncatedSeries
    gamma: TruncatedSeries
    q: TruncatedSeries
    a_e: TruncatedSeries
    a_f: TruncatedSeries
    a_h: TruncatedSeries
    a_k: TruncatedSeries
    b_ef: TruncatedSeries
    b_hk: TruncatedSeries


@lru_cache(maxsize=None)
def _pieces(order: int) -> _Pieces:
    r2 = r2_skew(order)

    def p(*coeffs: int) -> TruncatedSeries:
        return polynomial(coeffs, order)

    rho = r2 / p(2, 0, -1)
    gamma = (p(1, 0, 3) - r2.shift(1)) / p(1, 0, 1)
    q = rho * rho
    denom = 1 - 4 * q.shift(2)            # 1 - 4z^2*rho^2
    sum_ef = (gamma * q).shift(1) / denom   # e1 + f1
    sum_hk = (gamma * rho).shift(1) / denom  # h0 + k0
    a_e = 2 * (sum_ef * q).shift(2)
    a_k = 2 * (sum_hk * q).shift(2)
    return _Pieces(
        rho=rho,
        gamma=gamma,
        q=q,
        a_e=a_e,
        a_f=(gamma * q).shift(1) + a_e,
        a_h=(gamma * rho).shift(1) + a_k,
        a_k=a_k,
        b_ef=(sum_ef * q).shift(1),
        b_hk=(sum_hk * q).shift(1),
    )


@dataclass(frozen=True)
class SkewLevelGF:
    """Counting series for skew prefixes ending at one state (layer, level)."""

    layer: str
    level: int
    series: TruncatedSeries


def _slice_skew(
    pieces: _Pieces,
    layer: str,
    j: int,
    qpow: Callable[[int], TruncatedSeries],
    rhopow: Callable[[int], TruncatedSeries],
    order: int,
) -> TruncatedSeries:
    if layer == "G":
        return one(order) if j == 0 else pieces.gamma * rhopow(j)
    if layer in ("E", "F"):
        if j < 1:
            raise DomainError(f"layer {layer} has no level-0 state")
        head = pieces.a_e if layer == "E" else pieces.a_f
        if j % 2:
            return head if j == 1 else head * qpow((j - 1) // 2)
        return pieces.b_ef if j == 2 else pieces.b_ef * qpow((j - 2) // 2)
    if layer in ("H", "K"):
        head = pieces.a_h if layer == "H" else pieces.a_k
        if j % 2:
            return pieces.b_hk if j == 1 else pieces.b_hk * qpow((j - 1) // 2)
        return head if j == 0 else head * qpow(j // 2)
    raise DomainError(f"unknown skew layer {layer!r}")


def _check_counting_series(series: TruncatedSeries, what: str) -> None:
    for n, c in enumerate(series.coefficients):
        if c.denominator != 1 or c < 0:
            raise ArithmeticError(f"{what}: coefficient of z^{n} is {c}")


@lru_cache(maxsize=None)
def level_gf_skew(layer: str, level: int, order: int) -> SkewLevelGF:
    """The series counting skew prefixes that end at (layer, level)."""
    if level < 0:
        raise DomainError("level must be non-negative")
    if order < 2:
        raise DomainError("level_gf_skew needs order >= 2")
    pieces = _pieces(order)
    series = _slice_skew(
        pieces, layer, level,
        lambda m: pieces.q ** m, lambda k: pieces.rho ** k, order,
    )
    _check_counting_series(series, f"level series {layer}{level}")
    return SkewLevelGF(layer=layer, level=level, series=series)


@lru_cache(maxsize=None)
def sum_level_slices_skew(order: int) -> TruncatedSeries:
    """Sum of every level series; levels >= order cannot contribute."""
    pieces = _pieces(order)
    qpowers = [one(order)]
    rhopowers = [one(order)]

    def qpow(m: int) -> TruncatedSeries:
        while len(qpowers) <= m:
            qpowers.append(qpowers[-1] * pieces.q)
        return qpowers[m]

    def rhopow(k: int) -> TruncatedSeries:
        while len(rhopowers) <= k:
            rhopowers.append(rhopowers[-1] * pieces.rho)
        return rhopowers[k]

    total = one(order) + pieces.a_h + pieces.a_k  # g_0, h_0, k_0
    for j in range(1, order):
        for layer in ("E", "F", "G", "H", "K"):
            total = total + _slice_skew(pieces, layer, j, qpow, rhopow, order)
    return total


@lru_cache(maxsize=None)
def total_prefix_skew(order: int) -> TruncatedSeries:
    """Counting series of all skew prefixes, regardless of where they end.

    Closed form
        [z(2z^3+9z^2+4z-7) + (z+2)(2z+1)*sqrt(1-6z^2+5z^4)]
        / [2(1+z^2)(1-2z-z^2)],
    cross-checked against the sum of all level series on every call.
    """
    if order < 2:
        raise DomainError("total_prefix_skew needs order >= 2")
    root = _discriminant_root(order)
    numerator = polynomial([0, -7, 4, 9, 2], order) \
        + polynomial([2, 5, 2], order) * root
    denominator = 2 * (polynomial([1, 0, 1], order) * polynomial([1, -2, -1], order))
    closed = numerator / denominator
    if closed != sum_level_slices_skew(order):
        raise ArithmeticError("closed-form total disagrees with the level-series sum")
    return closed


@lru_cache(maxsize=None)
def _trinomial_row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _trinomial_row(n - 1)

    def at(k: int) -> int:
        return prev[k] if 0 <= k < len(prev) else 0

    return tuple(at(k) + 3 * at(k - 1) + at(k - 2) for k in range(2 * n + 1))


def trinomial(n: int, k: int) -> int:
    """Weighted trinomial coefficient: the coefficient of t^k in (1+3t+t^2)^n."""
    if n < 0:
        raise DomainError("trinomial needs n >= 0")
    row = _trinomial_row(n)
    return row[k] if 0 <= k < len(row) else 0


def r2_pow_coeff_skew(ell: int, n: int) -> int:
    """Coefficient of Z^n in (r2/z)^ell, where Z = z^2.

    For n >= 1 this is the weighted-trinomial sum
        sum_k C(ell,k) * 2^(ell-k) * [T(n-1, n-k) - T(n-1, n-k-2)];
    n = 0 degenerates to 2^ell, the constant term of (2 + v)^ell.
    """
    if ell < 1 or n < 0:
        raise DomainError("r2_pow_coeff_skew needs ell >= 1 and n >= 0")
    if n == 0:
        return 2 ** ell
    total = 0
    for k in range(ell + 1):
        t = trinomial(n - 1, n - k) - trinomial(n - 1, n - k - 2)
        if t:
            total += math.comb(ell, k) * 2 ** (ell - k) * t
    return total


def even_part(series: TruncatedSeries) -> TruncatedSeries:
    """Rewrite a series in z^2 as a series in Z: coefficient of Z^m is [z^(2m)].

    Fails if any odd-degree coefficient is nonzero.
    """
    coeffs = series.coefficients
    if any(coeffs[1::2]):
        raise DomainError("series has odd-degree terms; no expansion in z^2 exists")
    return TruncatedSeries(coeffs[0::2], (series.order + 1) // 2)


def v_series(order: int) -> TruncatedSeries:
    """The series v(Z) inverting Z = v/(1 + 3v + v^2).

    Computed by iterating v <- Z*(1 + 3v + v^2), which gains one exact
    coefficient per pass; satisfies 2 + v(Z) = (r2/z)(Z) with Z = z^2.
    """
    if order < 1:
        raise DomainError("v_series needs order >= 1")
    z_var = polynomial([0, 1], order)
    v = zero(order)
    for _ in range(order):
        nxt = z_var * (1 + 3 * v + v * v)
        if nxt == v:
            break
        v = nxt
    return v
