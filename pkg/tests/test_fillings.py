from collections import Counter
from fractions import Fraction
from math import gcd

import pytest

from lensfill.fillings import (
    Extremal,
    LensSpace,
    cap_tuple,
    extremal_form,
    fib_level,
    fibonacci,
    fillings_of,
    lens_canonical,
    lens_homeomorphic_unoriented,
    pi1_order,
)
from lensfill.rationals import cf_len, cf_V, hj_expand
from lensfill.tridiag import det_M

from oracles import h1_order, lens_class_brute


def summary(L):
    return [(F.tuple, F.b2, F.pi1_order) for F in fillings_of(L)]


def test_lens_space_validation():
    with pytest.raises(ValueError):
        LensSpace(4, 2)
    with pytest.raises(ValueError):
        LensSpace(3, 3)
    with pytest.raises(ValueError):
        LensSpace(5, 0)


@pytest.mark.parametrize("p, q, canon", [(9, 7, 4), (9, 2, 2), (2, 1, 1), (25, 14, 9)])
def test_lens_canonical_examples(p, q, canon):
    assert lens_canonical(LensSpace(p, q)) == LensSpace(p, canon)


def test_lens_canonical_against_brute_force_classes():
    for p in range(2, 80):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            canon = lens_canonical(LensSpace(p, q))
            assert canon.q == min(lens_class_brute(p, q))
            assert lens_canonical(canon) == canon


def test_unoriented_homeomorphism():
    assert lens_homeomorphic_unoriented(LensSpace(5, 1), LensSpace(5, 4))
    assert not lens_canonical(LensSpace(5, 1)) == lens_canonical(LensSpace(5, 4))
    assert not lens_homeomorphic_unoriented(LensSpace(5, 1), LensSpace(5, 2))


def test_fillings_examples():
    assert summary(LensSpace(4, 1)) == [((1, 2, 1), 1, 1), ((2, 1, 2), 0, 2)]
    assert summary(LensSpace(9, 2)) == [((1, 2, 2, 1), 2, 1), ((2, 2, 1, 3), 0, 3)]
    # the disk bundle of Euler number -5: one filling, b2 = 1
    assert summary(LensSpace(5, 1)) == [((1, 2, 2, 1), 1, 1)]


def test_cap_tuples():
    assert cap_tuple(LensSpace(4, 1)) == (2, 2, 2)
    assert cap_tuple(LensSpace(9, 2)) == (2, 2, 2, 3)
    assert cap_tuple(LensSpace(8, 3)) == (2, 3, 2)
    assert cap_tuple(LensSpace(7, 6)) == (7,)


@pytest.mark.parametrize("p", range(2, 40))
def test_standard_plumbing(p):
    (F,) = fillings_of(LensSpace(p, p - 1))
    assert F.tuple == (0,)
    assert F.b2 == p - 1
    assert F.pi1_order == 1
    assert F.strict_indices == (1,)


def test_pi1_examples():
    assert pi1_order((2, 2, 2), (2, 1, 2)) == 2
    assert pi1_order((2, 2, 2), (1, 2, 1)) == 1
    assert pi1_order((2, 2, 2, 3), (2, 2, 1, 3)) == 3


def test_pi1_matches_handle_presentation():
    for p in range(2, 46):
        for q in range(1, p):
            if gcd(p, q) == 1:
                for F in fillings_of(LensSpace(p, q)):
                    assert h1_order(F.cap, F.tuple) == F.pi1_order, F


def test_extremal_examples():
    F41 = fillings_of(LensSpace(4, 1))
    assert extremal_form(F41[1]) == Extremal(n=1, d=2, c=1)
    assert extremal_form(F41[0]) is None
    F92 = fillings_of(LensSpace(9, 2))
    assert extremal_form(F92[1]) == Extremal(n=1, d=3, c=2)
    assert lens_canonical(LensSpace(9, 5)) == lens_canonical(LensSpace(9, 2))


def test_fibonacci():
    assert [fibonacci(n) for n in range(1, 11)] == [1, 1, 2, 3, 5, 8, 13, 21, 34, 55]
    with pytest.raises(ValueError):
        fibonacci(0)


def test_fib_level():
    assert fib_level(1) == 0
    assert fib_level(3) == 2
    assert fib_level(8) == 4
    for d in range(1, 500):
        level = max(l for l in range(0, 20) if fibonacci(l + 2) <= d)
        assert fib_level(d) == level


# Properties over every filling with p <= 300 (session fixture).


def test_b2_between_zero_and_length(sweep_300):
    for F in sweep_300:
        assert 0 <= F.b2 <= cf_len(Fraction(F.lens.p, F.lens.q))


def test_length_gap_identity(sweep_300):
    for F in sweep_300:
        gap = cf_len(Fraction(F.lens.p, F.lens.q)) - F.b2
        assert gap == sum(n - 2 for n in F.tuple) + 2


def test_cap_is_expansion_and_tuple_dominated(sweep_300):
    for F in sweep_300:
        L = F.lens
        assert F.cap == hj_expand(Fraction(L.p, L.p - L.q))
        assert all(n <= b for n, b in zip(F.tuple, F.cap))
        assert F.strict_indices
        assert det_M(F.cap) == L.p


def test_interior_strict_index_divisibility(sweep_300):
    for F in sweep_300:
        k = len(F.tuple)
        for i in F.strict_indices:
            if 1 < i < k:
                left = det_M(F.tuple[: i - 1])
                assert left == det_M(F.tuple[i:])
                assert left % F.pi1_order == 0


def test_divisibility(sweep_300):
    for F in sweep_300:
        d = F.pi1_order
        assert F.lens.p % d == 0
        assert F.lens.p % (d * d) == 0


def _squarefree(n):
    return all(n % (k * k) for k in range(2, int(n**0.5) + 1))


def test_squarefree_p_gives_simply_connected(sweep_300):
    for F in sweep_300:
        if _squarefree(F.lens.p):
            assert F.pi1_order == 1


def test_extremal_form_holds_whenever_defined(sweep_300):
    for F in sweep_300:
        ext = extremal_form(F)
        if ext is not None:
            assert ext.n * ext.d**2 == F.lens.p
            assert cf_len(Fraction(F.lens.p, F.lens.q)) - F.b2 == cf_V(Fraction(ext.d, ext.c))


def test_fillings_agree_on_inverse_residue():
    for p in range(2, 101):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            qi = pow(q, -1, p)
            a = Counter((F.b2, F.pi1_order) for F in fillings_of(LensSpace(p, q)))
            b = Counter((F.b2, F.pi1_order) for F in fillings_of(LensSpace(p, qi)))
            assert a == b, (p, q)


def test_lens_spaces_with_q_one():
    assert len(fillings_of(LensSpace(4, 1))) == 2
    for p in range(2, 51):
        if p != 4:
            assert len(fillings_of(LensSpace(p, 1))) == 1, p
