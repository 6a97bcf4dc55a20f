"""Dimensions of U(n) irreducibles, plus literal transcriptions of printed closed forms.

``remark_formula`` and ``example_formula`` are kept exactly as printed, including
suspected misprints: they exist to be compared against :func:`dim_gl`, not used.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import InconsistencyError, ZeroRepresentationError
from .partitions import Partition, cells


@dataclass(frozen=True)
class DimensionRecord:
    lam: Partition
    n: int
    dim: int


def dim_gl(lam, n: int) -> int:
    """Hook-content formula: prod over cells of (n + content) / hook.

    Raises :class:`ZeroRepresentationError` when ``lam`` has more than ``n`` rows
    instead of quietly returning 0.
    """
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    if n < 1:
        raise ValueError("n must be positive")
    if len(lam) > n:
        raise ZeroRepresentationError(lam.parts, n)
    num = den = 1
    for cell in cells(lam):
        num *= n + cell.content
        den *= cell.hook
    q = Fraction(num, den)
    if q.denominator != 1:
        raise InconsistencyError(f"hook-content product for {lam}, n={n} is not integral: {q}")
    return q.numerator


def dimension_record(lam, n: int) -> DimensionRecord:
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    return DimensionRecord(lam, n, dim_gl(lam, n))


def remark_formula(m: int, k: int) -> int | Fraction:
    # printed: 1/(k+1)^2 C(m-1+k,m-1) C(m-2+k,m-2) (k+1 + C(m-1+k,m-1) C(m-2+k,m-2))
    #          - 2/(2k+1) C(m-1+2k,m-1) C(m-2+2k,m-2)
    a = comb(m - 1 + k, m - 1) * comb(m - 2 + k, m - 2)
    value = Fraction(a * (k + 1 + a), (k + 1) ** 2) - Fraction(
        2 * comb(m - 1 + 2 * k, m - 1) * comb(m - 2 + 2 * k, m - 2), 2 * k + 1
    )
    return value.numerator if value.denominator == 1 else value


def example_formula(k: int) -> int | Fraction:
    # printed (m = 2): -2/3 (1+k)^2 (1+2k)(3+2k)
    #                  + 1/144 (1+k)^5 (2+k)^2 (3+k) (24 + k(4+k)(7 + k(4+k)))
    k = Fraction(k)
    value = -Fraction(2, 3) * (1 + k) ** 2 * (1 + 2 * k) * (3 + 2 * k) + Fraction(1, 144) * (1 + k) ** 5 * (
        2 + k
    ) ** 2 * (3 + k) * (24 + k * (4 + k) * (7 + k * (4 + k)))
    return value.numerator if value.denominator == 1 else value
