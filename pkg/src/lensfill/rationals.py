"""Exact Hirzebruch-Jung continued fractions.

Everything here works over Python integers and :class:`fractions.Fraction`;
no floating point is ever involved.  The minus-sign continued fraction is

    [a_1, ..., a_k]^- = a_1 - 1/(a_2 - 1/(... - 1/a_k))

and every rational p/q > 1 has a unique expansion with all a_i >= 2.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

__all__ = [
    "INFINITY",
    "make_fraction",
    "hj_expand",
    "convergents",
    "cf_eval",
    "cf_measures",
    "cf_len",
    "cf_U",
    "cf_V",
    "op_S",
    "op_T",
    "apply_word",
    "st_decompose",
]


class _Infinity:
    """Value of a continued fraction whose last convergent denominator is 0."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITY"

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()


def make_fraction(p: int, q: int) -> Fraction:
    """Return the reduced fraction p/q (positive denominator)."""
    if q == 0:
        raise ZeroDivisionError(f"zero denominator in {p}/{q}")
    return Fraction(p, q)


def _require_gt_one(f: Fraction) -> Fraction:
    f = Fraction(f)
    if f <= 1:
        raise ValueError(f"expected a rational > 1, got {f}")
    return f


def hj_expand(f: Fraction) -> tuple[int, ...]:
    """Hirzebruch-Jung expansion of ``f > 1``; every coefficient is >= 2.

    Greedy: a = ceil(f), then recurse on 1/(a - f) until the remainder is 0.
    """
    f = _require_gt_one(f)
    p, q = f.numerator, f.denominator
    coeffs = []
    while q:
        a = -(-p // q)
        coeffs.append(a)
        # a - p/q = (a*q - p)/q, inverted
        p, q = q, a * q - p
    return tuple(coeffs)


def convergents(t: Sequence[int]) -> list[tuple[int, int]]:
    """All convergent pairs ``(p_i, q_i)`` of ``t``, starting from ``(1, 0)``.

    p_i = a_i p_{i-1} - p_{i-2}, q_i = a_i q_{i-1} - q_{i-2}, seeded so that
    the second pair is (a_1, 1).
    """
    pairs = [(1, 0)]
    pm2, qm2 = 0, -1  # virtual (p_{-1}, q_{-1}) giving p_1 = a_1, q_1 = 1
    pm1, qm1 = 1, 0
    for a in t:
        p, q = a * pm1 - pm2, a * qm1 - qm2
        pairs.append((p, q))
        pm2, qm2, pm1, qm1 = pm1, qm1, p, q
    return pairs


def cf_eval(t: Sequence[int]) -> Fraction | _Infinity:
    """Value of ``[t_1, ..., t_k]^-`` via convergents.

    Returns a :class:`Fraction` (possibly zero or negative) or
    :data:`INFINITY` when the final denominator vanishes, which includes
    the empty tuple.  No intermediate division is performed, so tuples that
    would hit 1/0 under nested evaluation are handled.
    """
    p, q = convergents(t)[-1]
    if q == 0:
        return INFINITY
    return Fraction(p, q)


def cf_measures(f: Fraction) -> tuple[int, int, int]:
    """(len, U, V) of ``f`` from a single expansion."""
    t = hj_expand(f)
    u = sum(t) - 2 * len(t)
    return len(t), u, u + len(t)


def cf_len(f: Fraction) -> int:
    return len(hj_expand(f))


def cf_U(f: Fraction) -> int:
    return sum(a - 2 for a in hj_expand(f))


def cf_V(f: Fraction) -> int:
    return sum(a - 1 for a in hj_expand(f))


def op_S(f: Fraction) -> Fraction:
    """(p+q)/q: adds one to the leading coefficient."""
    f = _require_gt_one(f)
    return f + 1


def op_T(f: Fraction) -> Fraction:
    """(2p-q)/p: prepends a 2 to the expansion."""
    f = _require_gt_one(f)
    return 2 - 1 / f


_OPS = {"S": op_S, "T": op_T}


def apply_word(word: str, f: Fraction = Fraction(2)) -> Fraction:
    """Apply an S/T word to ``f``; the rightmost letter acts first."""
    for letter in reversed(word):
        f = _OPS[letter](f)
    return f


def st_decompose(f: Fraction) -> str:
    """The unique word w over {S, T} with ``apply_word(w) == f``.

    Peels letters from the outside: a value above 2 came from S, a value
    strictly between 1 and 2 came from T.
    """
    f = _require_gt_one(f)
    letters = []
    while f != 2:
        if f > 2:
            letters.append("S")
            f = f - 1
        else:
            letters.append("T")
            f = 1 / (2 - f)
    return "".join(letters)
