"""Counting the terms of the order-n expansion.

The number a(n) of formula partitions is the coefficient of t^n u^(n-1) in
the product over all admissible parts (i, j) of 1 / (1 - t^i u^(i+j-1)) -
note the combined exponent i + j - 1, which encodes the constraint that the
second coordinates sum to one less than the number of parts.  Writing that
product as F(u, t) = sum p_n(t) u^n, the p_n satisfy a convolution recurrence
against the u-coefficients q_m(t) of log F, and those q_m have an explicit
divisor-sum form.  Everything is computed in exact rational arithmetic.

The module also evaluates the count Comtet and Fiolet published, the
coefficient of t^n u^(n-1) in the product of 1 / (1 - t^i u^j), which is
wrong already at n = 2.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .partitions import formula_partitions


class TruncatedSeries:
    """Polynomial in one variable with exact rational coefficients, truncated
    beyond a fixed degree bound.  Arithmetic never grows the bound."""

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[Fraction | int], bound: int | None = None):
        coeffs = [Fraction(c) for c in coefficients]
        if bound is not None:
            if bound < 0:
                raise ValueError("degree bound must be non-negative")
            coeffs = coeffs[: bound + 1] + [Fraction(0)] * (bound + 1 - len(coeffs))
        if not coeffs:
            raise ValueError("a series needs at least the degree-0 coefficient")
        self._coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, bound: int) -> "TruncatedSeries":
        return cls([0], bound=bound)

    @property
    def bound(self) -> int:
        return len(self._coeffs) - 1

    def __getitem__(self, degree: int) -> Fraction:
        if not 0 <= degree <= self.bound:
            raise IndexError(f"degree {degree} outside bound {self.bound}")
        return self._coeffs[degree]

    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        bound = min(self.bound, other.bound)
        return TruncatedSeries(
            [self._coeffs[d] + other._coeffs[d] for d in range(bound + 1)]
        )

    def __mul__(self, other: "TruncatedSeries | Fraction | int") -> "TruncatedSeries":
        if isinstance(other, (Fraction, int)):
            return TruncatedSeries([c * other for c in self._coeffs])
        bound = min(self.bound, other.bound)
        coeffs = [Fraction(0)] * (bound + 1)
        for d, a in enumerate(self._coeffs[: bound + 1]):
            if a == 0:
                continue
            for e in range(bound + 1 - d):
                b = other._coeffs[e]
                if b != 0:
                    coeffs[d + e] += a * b
        return TruncatedSeries(coeffs)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"TruncatedSeries({[str(c) for c in self._coeffs]})"


def log_series(m: int, bound: int) -> TruncatedSeries:
    """Coefficient of u^m in the logarithm of the counting product, as a
    t-series: the divisor sum over d | m of t^(i*d) / d for i = 0 .. m/d + 1,
    truncated to the degree bound."""
    if m < 1:
        raise ValueError("index must be >= 1")
    coeffs = [Fraction(0)] * (bound + 1)
    for d in range(1, m + 1):
        if m % d:
            continue
        share = Fraction(1, d)
        for i in range(m // d + 2):
            if i * d > bound:
                break
            coeffs[i * d] += share
    return TruncatedSeries(coeffs)


def series_table(max_index: int, bound: int) -> list[TruncatedSeries]:
    """u-coefficients p_0 .. p_max_index of the counting product.

    p_0 is the truncation of 1/(1 - t); each later p_n comes from the
    convolution recurrence n * p_n = sum over s of s * q_s * p_(n-s).
    Requires bound >= max_index, since extracting a(n) needs degree n in
    p_(n-1)."""
    if max_index < 0:
        raise ValueError("max index must be non-negative")
    if bound < max_index:
        raise ValueError(
            f"degree bound {bound} too small for table index {max_index}: "
            "the term count at order n reads degree n of the entry n - 1"
        )
    logs = [log_series(s, bound) for s in range(1, max_index + 1)]
    table = [TruncatedSeries([1] * (bound + 1))]
    for n in range(1, max_index + 1):
        acc = TruncatedSeries.zero(bound)
        for s in range(1, n + 1):
            acc = acc + logs[s - 1] * table[n - s] * s
        table.append(acc * Fraction(1, n))
    return table


def term_count_gf(n: int) -> int:
    """a(n) extracted from the generating function: the degree-n coefficient
    of p_(n-1).  The exact rational result is checked to be an integer."""
    if n < 1:
        raise ValueError("derivative order must be >= 1")
    table = series_table(n - 1, n)
    value = table[n - 1][n]
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral term count at n={n}: {value}")
    return int(value)


def term_count_enum(n: int) -> int:
    """a(n) by direct enumeration of the formula partitions."""
    return len(formula_partitions(n))


def cf_term_count(n: int) -> int:
    """Coefficient of t^n u^(n-1) in the product over parts (i, j) of
    1 / (1 - t^i u^j): the count published in 1974.

    Factors with i > n cannot reach t-degree n, and factors with j > n - 1
    cannot reach u-degree n - 1, so the product is truncated to the finitely
    many remaining factors.  Disagrees with a(n) already at n = 2.
    """
    if n < 1:
        raise ValueError("derivative order must be >= 1")
    t_top, u_top = n, n - 1
    grid = [[0] * (u_top + 1) for _ in range(t_top + 1)]
    grid[0][0] = 1
    for i in range(t_top + 1):
        for j in range(u_top + 1):
            if (i, j) in ((0, 0), (0, 1)):
                continue
            # Multiply by the geometric series in t^i u^j: cumulative update.
            for x in range(i, t_top + 1) if i else range(t_top + 1):
                row, past = grid[x], grid[x - i]
                for y in range(j, u_top + 1):
                    row[y] += past[y - j]
    return grid[t_top][u_top]
