"""Admissible tuples with continued-fraction value zero.

A tuple n is admissible when M(n) is positive semidefinite of rank at
least len(n) - 1.  Zero tuples (admissible, [n]^- = 0) are exactly the
tuples reachable from ``(0,)`` by blow-ups; there are Catalan(k-1) of them
in length k.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .rationals import cf_eval
from .tridiag import is_psd_rank_at_least

__all__ = [
    "K_MAX",
    "blow_down",
    "blow_up",
    "is_admissible_zero",
    "is_admissible_zero_psd",
    "enumerate_zero_tuples",
    "enumerate_bounded",
]

K_MAX = 14

ZeroTuple = tuple[int, ...]


def blow_down(t: Sequence[int], j: int) -> tuple[int, ...]:
    """Contract the entry 1 at 1-based position ``j``."""
    k = len(t)
    if k < 2:
        raise ValueError("cannot blow down a tuple of length < 2")
    if not 1 <= j <= k:
        raise IndexError(f"position {j} out of range for length {k}")
    if t[j - 1] != 1:
        raise ValueError(f"entry {j} of {tuple(t)} is {t[j - 1]}, not 1")
    t = list(t)
    if j == 1:
        return (t[1] - 1, *t[2:])
    if j == k:
        return (*t[: k - 2], t[k - 2] - 1)
    return (*t[: j - 2], t[j - 2] - 1, t[j] - 1, *t[j + 1 :])


def blow_up(t: Sequence[int], slot: int) -> tuple[int, ...]:
    """Insert a 1 at ``slot`` (0 = before the first entry, len(t) = after the last).

    Neighbours of the new entry are each raised by one; this undoes
    :func:`blow_down`.
    """
    k = len(t)
    if not 0 <= slot <= k:
        raise IndexError(f"slot {slot} out of range for length {k}")
    t = list(t)
    if slot == 0:
        return (1, t[0] + 1, *t[1:])
    if slot == k:
        return (*t[:-1], t[-1] + 1, 1)
    return (*t[: slot - 1], t[slot - 1] + 1, 1, t[slot] + 1, *t[slot + 1 :])


def is_admissible_zero(t: Sequence[int]) -> bool:
    """Blow down at the first 1 until stuck; admissible zero iff we reach (0)."""
    t = tuple(t)
    while len(t) > 1:
        try:
            j = t.index(1) + 1
        except ValueError:
            return False
        t = blow_down(t, j)
    return t == (0,)


def is_admissible_zero_psd(t: Sequence[int]) -> bool:
    """Independent check: value zero and M(t) PSD of rank >= len(t) - 1."""
    return len(t) >= 1 and cf_eval(t) == 0 and is_psd_rank_at_least(t, len(t) - 1)


@lru_cache(maxsize=None)
def _zero_tuples(k: int) -> frozenset[ZeroTuple]:
    if k == 1:
        return frozenset({(0,)})
    return frozenset(
        blow_up(t, slot) for t in _zero_tuples(k - 1) for slot in range(k)
    )


def enumerate_zero_tuples(k: int, k_max: int = K_MAX) -> frozenset[ZeroTuple]:
    """All zero tuples of length ``k`` (blow-up closure of (0,))."""
    if not 1 <= k <= k_max:
        raise ValueError(f"length {k} outside 1..{k_max}")
    return _zero_tuples(k)


def enumerate_bounded(cap: Sequence[int]) -> list[ZeroTuple]:
    """Zero tuples n of the same length as ``cap`` with n_i <= cap_i, sorted.

    Depth-first over n_i in 1..cap_i, tracking the prefix convergent
    numerators alpha_i = det M(n_1..n_i).  Two necessary conditions cut
    the search:

    * alpha_i > 0 for i < k (proper leading minors of an admissible zero
      tuple are positive);
    * alpha_i <= det M(cap_{i+2..k}), because in a zero tuple
      alpha_i = det M(n_{i+2..k}) and the determinant is monotone on
      positive semidefinite matrices.

    Leaves need alpha_k = 0 and alpha_{k-1} = 1 and are then re-checked with
    :func:`is_admissible_zero`.
    """
    cap = tuple(cap)
    k = len(cap)
    if k == 0:
        return []
    if k == 1:
        return [(0,)] if cap[0] >= 0 else []

    # tail_det[j] = det M(cap[j:]) (0-based), with tail_det[k] = 1
    tail_det = [1] * (k + 2)
    later = 0
    for j in range(k - 1, -1, -1):
        tail_det[j], later = cap[j] * tail_det[j + 1] - later, tail_det[j + 1]

    found: list[ZeroTuple] = []
    # Each frame: (position, alpha_{i-2}, alpha_{i-1}, next candidate for n_i).
    # alpha_{-1} = 0 and alpha_0 = 1 seed the recurrence.
    prefix: list[int] = []
    stack = [(0, 0, 1, 1)]
    while stack:
        i, a2, a1, n_i = stack.pop()
        if i == k - 1:
            # alpha_k = n_k * alpha_{k-1} - alpha_{k-2} = 0 with alpha_{k-1} = 1
            if a1 == 1 and 1 <= a2 <= cap[i]:
                n = (*prefix, a2)
                if not is_admissible_zero(n):
                    raise AssertionError(f"pruned search accepted {n}")
                found.append(n)
            if prefix:
                prefix.pop()
            continue
        if n_i > cap[i]:
            if prefix:
                prefix.pop()
            continue
        stack.append((i, a2, a1, n_i + 1))
        alpha = n_i * a1 - a2
        if alpha > tail_det[i + 2]:
            # alpha only grows with n_i
            if prefix:
                prefix.pop()
            stack.pop()
            continue
        if alpha > 0:
            prefix.append(n_i)
            stack.append((i + 1, a1, alpha, 1))
    found.sort()
    return found
