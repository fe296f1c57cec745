"""Determinants and semidefiniteness of the tridiagonal matrices M(x).

M(x) has ``x`` on the diagonal and -1 on both off-diagonals.  Only exact
integer/rational arithmetic is used.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

__all__ = ["det_M", "psd_rank", "is_psd_rank_at_least", "multilinearity_expand"]


def det_M(t: Sequence[int]) -> int:
    """det M(t), expanding along the first row.

    det M(x_1..x_k) = x_1 det M(x_2..x_k) - det M(x_3..x_k), with
    det M() = 1 and det M(x) = x.  Evaluated from the tail so the recursion
    is a loop.
    """
    later, current = 0, 1  # det of the empty matrix, plus a virtual zero
    for x in reversed(t):
        later, current = current, x * current - later
    return current


def psd_rank(t: Sequence[int]) -> int | None:
    """Rank of M(t) if it is positive semidefinite, else ``None``.

    Symmetric Gaussian elimination with exact pivots d_1 = x_1,
    d_i = x_i - 1/d_{i-1}.  A negative pivot means indefinite.  A zero pivot
    before the last row still couples to the next row through the -1
    off-diagonal, and a PSD matrix cannot have that, so it is rejected too.
    """
    rank = 0
    pivot: Fraction | None = None
    k = len(t)
    for i, x in enumerate(t):
        pivot = Fraction(x) if pivot is None else x - 1 / pivot
        if pivot < 0:
            return None
        if pivot == 0:
            if i < k - 1:
                return None
        else:
            rank += 1
    return rank


def is_psd_rank_at_least(t: Sequence[int], r: int) -> bool:
    rank = psd_rank(t)
    return rank is not None and rank >= r


def multilinearity_expand(t: Sequence[int], i: int, m: int) -> int:
    """det M(t) with the (1-based, interior) entry ``i`` raised by ``m``.

    Computed as det M(t) + m * det M(t_1..t_{i-1}) * det M(t_{i+1}..t_k)
    rather than by re-running the recursion on the modified tuple.
    """
    k = len(t)
    if not 1 < i < k:
        raise IndexError(f"index {i} is not interior to a tuple of length {k}")
    return det_M(t) + m * det_M(t[: i - 1]) * det_M(t[i:])
