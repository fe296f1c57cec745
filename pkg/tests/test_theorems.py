import json
from fractions import Fraction

from lensfill.fillings import LensSpace, fibonacci, lens_canonical
from lensfill.rationals import cf_measures
from lensfill.theorems import (
    _below_phi_power,
    d2_family,
    equality_census_d2,
    equality_census_fib,
    fib_family,
    verify_cf_identities,
    verify_divisibility_bound,
    verify_fibonacci_extremal,
    verify_length_bound,
)

from oracles import coprime_pairs


def test_divisibility_sweep_small():
    rep = verify_divisibility_bound(50)
    assert rep.ok and rep.checked > 0
    cases = {(c["p"], c["q"], tuple(c["tuple"])): c for c in rep.equality_cases}
    w = cases[(4, 1, (2, 1, 2))]
    assert (w["d"], w["b2"]) == (2, 0)
    w = cases[(8, 3, (2, 1, 2))]
    assert (w["d"], w["b2"]) == (2, 1)
    assert w["extremal"] == {"n": 2, "d": 2, "c": 1}


def test_length_sweep_small():
    rep = verify_length_bound(50)
    assert rep.ok
    cases = {(c["p"], c["q"], tuple(c["tuple"])): c for c in rep.equality_cases}
    assert cases[(9, 2, (2, 2, 1, 3))]["l"] == 2
    assert cases[(9, 2, (2, 2, 1, 3))]["len"] == 2
    assert cases[(4, 1, (2, 1, 2))]["l"] == 1


def test_phi_power_comparison_against_high_precision():
    from mpmath import mp, mpf, sqrt

    mp.dps = 60
    phi = (1 + sqrt(5)) / 2
    for m in range(1, 40):
        bound = phi**m
        for d in range(1, 200):
            assert _below_phi_power(d, m) == (mpf(d) < bound)
        near = int(bound)
        for d in (near - 1, near, near + 1, near + 2):
            if d >= 1:
                assert _below_phi_power(d, m) == (mpf(d) < bound)


def test_d2_census_small():
    rep = equality_census_d2(36)
    assert rep.ok, rep.violations
    members = {(c["p"], c["q"], c["key"]) for c in rep.equality_cases}
    for p, q, d in [(4, 1, 2), (8, 3, 2), (9, 2, 3), (12, 5, 2), (16, 7, 2), (25, 9, 5)]:
        canon = lens_canonical(LensSpace(p, q))
        assert (canon.p, canon.q, d) in members
    for p in range(2, 37):
        assert (p, p - 1, 1) in members


def test_d2_family_literal():
    fam = d2_family(36)
    assert (9, 2, 3) in fam
    assert (8, 3, 2) in fam
    assert all(p <= 36 for p, _, _ in fam)


def test_fib_census_small():
    rep = equality_census_fib(60)
    assert rep.ok, rep.violations
    members = {(c["p"], c["q"], c["key"]) for c in rep.equality_cases}
    assert (4, 1, 1) in members
    assert (9, 2, 2) in members
    assert (25, 9, 3) in members
    assert fib_family(60) == members


def test_fib_family_literal():
    f2, f0 = fibonacci(5), fibonacci(3)
    assert f2 * f2 == 25 and f0 * f2 - 1 == 9
    assert (25, 9, 3) in fib_family(25)


def test_fibonacci_extremal():
    rep = verify_fibonacci_extremal(6)
    assert rep.ok
    by_level = {c["L"]: c for c in rep.equality_cases}
    assert by_level[1]["maximizers"] == ["2/1"]
    assert by_level[4]["max"] == 8 and set(by_level[4]["maximizers"]) == {"8/3", "8/5"}
    assert by_level[6]["max"] == 21 and set(by_level[6]["maximizers"]) == {"21/8", "21/13"}


def test_fibonacci_extremal_against_direct_enumeration():
    """Independent of S/T words: bucket every p/q with p <= 200 by V."""
    by_v = {}
    for p, q in coprime_pairs(200):
        by_v.setdefault(cf_measures(Fraction(p, q))[2], set()).add(Fraction(p, q))
    for L in range(1, 9):  # F_10 = 55, and V >= 9 can still have p <= 200
        group = by_v[L]
        assert len(group) == 2 ** (L - 1)
        top = max(f.numerator for f in group)
        assert top == fibonacci(L + 2)
        assert {f for f in group if f.numerator == top} == {
            Fraction(top, fibonacci(L)),
            Fraction(top, fibonacci(L + 1)),
        }


def test_identities_small():
    rep = verify_cf_identities(50)
    assert rep.ok and rep.checked == sum(1 for _ in coprime_pairs(50))


def test_reports_identical_across_job_counts():
    for fn in (verify_divisibility_bound, verify_length_bound, equality_census_d2, equality_census_fib):
        a = json.dumps(fn(40, jobs=1).to_dict(), sort_keys=True)
        b = json.dumps(fn(40, jobs=3).to_dict(), sort_keys=True)
        assert a == b


def test_reports_identical_across_runs():
    a = json.dumps(verify_length_bound(30).to_dict())
    b = json.dumps(verify_length_bound(30).to_dict())
    assert a == b
