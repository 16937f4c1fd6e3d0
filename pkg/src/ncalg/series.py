"""Truncated integer power series: Hilbert series and series inversion."""

from __future__ import annotations

from typing import Sequence

from .counting import normal_word_counts
from .gbasis import TruncatedGB


class SeriesError(ValueError):
    pass


class PowerSeries:
    """Integer coefficients c_0..c_D of a series truncated at degree D."""

    __slots__ = ("coeffs", "truncation")

    def __init__(self, coeffs: Sequence[int]):
        self.coeffs = list(int(c) for c in coeffs)
        self.truncation = len(self.coeffs) - 1

    def __getitem__(self, d: int) -> int:
        return self.coeffs[d] if 0 <= d <= self.truncation else 0

    def __eq__(self, other):
        return isinstance(other, PowerSeries) and self.coeffs == other.coeffs

    def __repr__(self):
        return f"PowerSeries({self.coeffs})"

    def mul(self, other: "PowerSeries", truncation: int = None) -> "PowerSeries":
        D = min(self.truncation + other.truncation,
                self.truncation if truncation is None else truncation,
                other.truncation if truncation is None else truncation)
        if truncation is not None:
            D = truncation
        out = [0] * (D + 1)
        for d in range(D + 1):
            out[d] = sum(self[k] * other[d - k] for k in range(d + 1))
        return PowerSeries(out)


def invert_series(p: PowerSeries, truncation: int = None) -> PowerSeries:
    """Multiplicative inverse: p * result = 1 + O(g^{D+1}).

    Requires constant term +-1 (keeps everything over the integers).
    """
    D = p.truncation if truncation is None else truncation
    c0 = p[0]
    if c0 not in (1, -1):
        raise SeriesError(f"constant term must be +-1, got {c0}")
    out = [0] * (D + 1)
    out[0] = c0
    for d in range(1, D + 1):
        acc = sum(p[k] * out[d - k] for k in range(1, d + 1))
        out[d] = -c0 * acc
    return PowerSeries(out)


def hilbert_series(gb: TruncatedGB, dmax: int) -> PowerSeries:
    """Hilbert series of the quotient through degree dmax: c_d = dim A_d.

    Raises IncompleteBasisError naming the first uncovered degree when the
    basis is not complete through dmax.
    """
    return PowerSeries(normal_word_counts(gb, dmax))


def poincare_at_minus_one(betti_cells: dict, jmax: int) -> PowerSeries:
    """P(-1, g) truncated at jmax from a Betti cell map {(i, j): dim}."""
    out = [0] * (jmax + 1)
    for (i, j), b in betti_cells.items():
        if 0 <= j <= jmax:
            out[j] += (b if i % 2 == 0 else -b)
    return PowerSeries(out)
