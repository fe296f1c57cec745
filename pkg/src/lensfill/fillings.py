"""Minimal symplectic fillings of lens spaces, up to diffeomorphism.

For L(p, q) write p/(p-q) = [b_1, ..., b_k]^-.  Each zero tuple n with
n_i <= b_i gives a filling W_{p,q}(n) with

    b2   = sum(b_i - n_i) - 1
    pi_1 = Z/d,  d = gcd of alpha_{i-1} over the indices with b_i > n_i

where alpha_i is the i-th convergent numerator of n (alpha_0 = 1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Sequence

from .rationals import cf_eval, cf_len, cf_V, convergents, hj_expand
from .zero_tuples import enumerate_bounded

__all__ = [
    "LensSpace",
    "Filling",
    "Extremal",
    "lens_canonical",
    "lens_homeomorphic",
    "lens_homeomorphic_unoriented",
    "cap_tuple",
    "pi1_order",
    "fillings_of",
    "extremal_form",
    "fibonacci",
    "fib_level",
]


@dataclass(frozen=True, order=True)
class LensSpace:
    p: int
    q: int

    def __post_init__(self):
        if not (self.p > self.q >= 1):
            raise ValueError(f"L({self.p},{self.q}) needs p > q >= 1")
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"L({self.p},{self.q}) needs gcd(p, q) = 1")

    def __str__(self) -> str:
        return f"L({self.p},{self.q})"


def lens_canonical(L: LensSpace) -> LensSpace:
    """Representative of L under orientation-preserving homeomorphism.

    L(p, q) and L(p, q') are orientation-preserving homeomorphic exactly
    when q' = q or q q' = 1 mod p; we pick the smaller of q and q^-1.
    """
    q = L.q % L.p
    return LensSpace(L.p, min(q, pow(q, -1, L.p)))


def lens_homeomorphic(a: LensSpace, b: LensSpace) -> bool:
    return lens_canonical(a) == lens_canonical(b)


def lens_homeomorphic_unoriented(a: LensSpace, b: LensSpace) -> bool:
    """Homeomorphic allowing orientation reversal (q' = -q^{+-1} mod p)."""
    if a.p != b.p:
        return False
    if lens_homeomorphic(a, b):
        return True
    return lens_homeomorphic(a, LensSpace(b.p, b.p - b.q))


def cap_tuple(L: LensSpace) -> tuple[int, ...]:
    """Expansion of p/(p-q); bounds the zero tuples entrywise."""
    return hj_expand(Fraction(L.p, L.p - L.q))


def pi1_order(cap: Sequence[int], t: Sequence[int]) -> int:
    alphas = [p for p, _ in convergents(t)]
    ds = [alphas[i] for i, (b, n) in enumerate(zip(cap, t)) if b > n]
    return reduce(gcd, ds, 0)


@dataclass(frozen=True)
class Extremal:
    n: int
    d: int
    c: int


@dataclass(frozen=True)
class Filling:
    lens: LensSpace
    cap: tuple[int, ...]
    tuple: tuple[int, ...]
    b2: int
    pi1_order: int
    strict_indices: tuple[int, ...] = field(default=())

    @property
    def simply_connected(self) -> bool:
        return self.pi1_order == 1


def _make_filling(L: LensSpace, cap: tuple[int, ...], n: tuple[int, ...]) -> Filling:
    strict = tuple(i + 1 for i, (b, m) in enumerate(zip(cap, n)) if b > m)
    return Filling(
        lens=L,
        cap=cap,
        tuple=n,
        b2=sum(cap) - sum(n) - 1,
        pi1_order=pi1_order(cap, n),
        strict_indices=strict,
    )


def fillings_of(L: LensSpace) -> list[Filling]:
    """One filling per zero tuple under the cap, ordered by tuple."""
    cap = cap_tuple(L)
    return [_make_filling(L, cap, n) for n in enumerate_bounded(cap)]


def extremal_form(F: Filling) -> Extremal | None:
    """Parameters (n, d, c) with L homeomorphic to L(n d^2, n d c - 1).

    Only defined for non-simply-connected fillings with a single index where
    the cap is strictly larger than the tuple; then d/c is the value of the
    tuple before that index.  The identity is asserted, so a failure here
    means the enumeration or the pi_1 computation is wrong.
    """
    if F.pi1_order == 1 or len(F.strict_indices) != 1:
        return None
    (j,) = F.strict_indices
    n = F.b2 + 1
    if j == 1:
        raise AssertionError(f"{F.lens}: single strict index at the first position")
    dc = cf_eval(F.tuple[: j - 1])
    d, c = dc.numerator, dc.denominator
    if not 0 < c < d:
        raise AssertionError(f"{F.lens}: prefix value {dc} not > 1")
    if d != F.pi1_order:
        raise AssertionError(f"{F.lens}: |pi1| = {F.pi1_order} but d = {d}")
    model = LensSpace(n * d * d, n * d * c - 1)
    if not lens_homeomorphic(F.lens, model):
        raise AssertionError(f"{F.lens} is not homeomorphic to {model}")
    if cf_len(Fraction(F.lens.p, F.lens.q)) - F.b2 != cf_V(dc):
        raise AssertionError(f"{F.lens}: len - b2 != V({dc})")
    return Extremal(n=n, d=d, c=c)


def fibonacci(n: int) -> int:
    """F_n with F_1 = F_2 = 1."""
    if n < 1:
        raise ValueError(f"Fibonacci index must be >= 1, got {n}")
    a, b = 0, 1
    for _ in range(n - 1):
        a, b = b, a + b
    return b


def fib_level(d: int) -> int:
    """Largest l >= 0 with F_{l+2} <= d."""
    if d < 1:
        raise ValueError(f"expected d >= 1, got {d}")
    level = 0
    a, b = 1, 2  # F_{l+2}, F_{l+3}
    while b <= d:
        level += 1
        a, b = b, a + b
    return level
