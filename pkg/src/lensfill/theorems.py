"""Exhaustive sweeps checking the filling bounds and equality censuses.

Every sweep walks all coprime pairs p > q >= 1 up to a bound (all residues
q, not just canonical ones), so the lens-space classifier is exercised as a
side effect.  Work is split by p; with ``jobs > 1`` a process pool is used
and results are merged in p order, so reports do not depend on ``jobs``.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import gcd
from typing import Any, Callable, Iterable

from .fillings import (
    LensSpace,
    extremal_form,
    fib_level,
    fibonacci,
    fillings_of,
    lens_canonical,
    lens_homeomorphic_unoriented,
)
from .rationals import cf_len, cf_measures, cf_V, op_S, op_T, st_decompose

__all__ = [
    "ScanReport",
    "verify_divisibility_bound",
    "verify_length_bound",
    "equality_census_d2",
    "equality_census_fib",
    "verify_fibonacci_extremal",
    "verify_cf_identities",
    "run_all",
    "VERIFIERS",
]


@dataclass
class ScanReport:
    name: str
    bound: int
    checked: int = 0
    violations: list[dict] = field(default_factory=list)
    equality_cases: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict[str, Any]:
        out = asdict(self)
        out["ok"] = self.ok
        return out


def _coprime_pairs(p: int) -> Iterable[int]:
    return (q for q in range(1, p) if gcd(p, q) == 1)


def _map_by_p(worker: Callable, p_max: int, jobs: int) -> list:
    ps = range(2, p_max + 1)
    if jobs <= 1:
        return [worker(p) for p in ps]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(worker, ps, chunksize=4))


def _witness(F, **extra) -> dict:
    return {"p": F.lens.p, "q": F.lens.q, "tuple": list(F.tuple), **extra}


def _sort_key(rec: dict):
    return (rec.get("p", 0), rec.get("q", 0), tuple(rec.get("tuple", ())), rec.get("kind", ""))


def _merge(report: ScanReport, parts: list) -> ScanReport:
    for checked, violations, equalities in parts:
        report.checked += checked
        report.violations.extend(violations)
        report.equality_cases.extend(equalities)
    report.violations.sort(key=_sort_key)
    report.equality_cases.sort(key=_sort_key)
    return report


# Divisibility bound: d^2 | p and b2 <= p/d^2 - 1.


def _divisibility_at(p: int):
    checked, violations, equalities = 0, [], []
    for q in _coprime_pairs(p):
        for F in fillings_of(LensSpace(p, q)):
            checked += 1
            d = F.pi1_order
            if p % (d * d):
                violations.append(_witness(F, kind="d^2 does not divide p", d=d, b2=F.b2))
                continue
            bound = p // (d * d) - 1
            if F.b2 > bound:
                violations.append(_witness(F, kind="b2 > p/d^2 - 1", d=d, b2=F.b2))
            elif F.b2 == bound:
                ext = extremal_form(F)
                if d > 1 and ext is None:
                    violations.append(_witness(F, kind="equality without a single strict index", d=d))
                equalities.append(
                    _witness(F, d=d, b2=F.b2, extremal=None if ext is None else asdict(ext))
                )
    return checked, violations, equalities


def verify_divisibility_bound(p_max: int, jobs: int = 1) -> ScanReport:
    return _merge(ScanReport("thm-divisibility", p_max), _map_by_p(_divisibility_at, p_max, jobs))


# Length bound: b2 <= len(p/q) - l when |pi1| >= F_{l+2}.


def _below_phi_power(d: int, m: int) -> bool:
    """Exact test of d < phi^m for m >= 1, using phi^m = F_m phi + F_{m-1}."""
    fm, fm1 = fibonacci(m), (fibonacci(m - 1) if m > 1 else 0)
    # d - F_{m-1} < F_m (1 + sqrt5)/2  <=>  2(d - F_{m-1}) - F_m < F_m sqrt5
    x = 2 * (d - fm1) - fm
    return x < 0 or x * x < 5 * fm * fm


def _length_at(p: int):
    checked, violations, equalities = 0, [], []
    for q in _coprime_pairs(p):
        length = cf_len(Fraction(p, q))
        for F in fillings_of(LensSpace(p, q)):
            checked += 1
            d = F.pi1_order
            level = fib_level(d)
            gap = length - F.b2
            if gap < level:
                violations.append(_witness(F, kind="b2 > len - l", d=d, b2=F.b2, len=length, l=level))
                continue
            if fibonacci(gap + 2) < d:
                violations.append(_witness(F, kind="F_{len-b2+2} < d", d=d, b2=F.b2, len=length))
            if not _below_phi_power(d, gap + 1):
                violations.append(_witness(F, kind="b2 >= len - log_phi d + 1", d=d, b2=F.b2, len=length))
            if d > 1 and gap == level:
                equalities.append(_witness(F, d=d, b2=F.b2, len=length, l=level))
    return checked, violations, equalities


def verify_length_bound(p_max: int, jobs: int = 1) -> ScanReport:
    return _merge(ScanReport("thm-length", p_max), _map_by_p(_length_at, p_max, jobs))


# Equality censuses.


def _d2_members_at(p: int):
    """(p, q, d, tuples) for every q and d where b2 = p/d^2 - 1 is attained."""
    out = []
    for q in _coprime_pairs(p):
        hits: dict[int, list] = {}
        for F in fillings_of(LensSpace(p, q)):
            d = F.pi1_order
            if p % (d * d) == 0 and F.b2 == p // (d * d) - 1:
                hits.setdefault(d, []).append(F.tuple)
        out.extend((p, q, d, ts) for d, ts in sorted(hits.items()))
    return out


def _fib_members_at(p: int):
    out = []
    for q in _coprime_pairs(p):
        length = cf_len(Fraction(p, q))
        hits: dict[int, list] = {}
        for F in fillings_of(LensSpace(p, q)):
            d = F.pi1_order
            if d == 1:
                continue
            level = fib_level(d)
            if d == fibonacci(level + 2) and F.b2 == length - level:
                hits.setdefault(level, []).append(F.tuple)
        out.extend((p, q, level, ts) for level, ts in sorted(hits.items()))
    return out


def _census(name: str, p_max: int, observed_parts: list, expected: set, unique: bool) -> ScanReport:
    """Compare sweep hits against a closed-form family of (p, q_canonical, key)."""
    report = ScanReport(name, p_max)
    observed: dict[tuple, list] = {}
    classes: dict[tuple[int, int], set] = {}
    for part in observed_parts:
        for p, q, key, tuples in part:
            report.checked += 1
            canon = lens_canonical(LensSpace(p, q))
            member = (canon.p, canon.q, key)
            observed.setdefault(member, []).append((q, tuples))
            if unique and len(tuples) != 1:
                report.violations.append(
                    {"kind": "non-unique", "p": p, "q": q, "key": key, "tuples": [list(t) for t in tuples]}
                )
    # every q in a canonical class must see the same hits
    for p in range(2, p_max + 1):
        for q in _coprime_pairs(p):
            canon = lens_canonical(LensSpace(p, q))
            classes.setdefault((canon.p, canon.q), set()).add(q)
    for (p, qc, key), hits in observed.items():
        seen = {q for q, _ in hits}
        if seen != classes[(p, qc)]:
            report.violations.append(
                {"kind": "class-inconsistent", "p": p, "q": qc, "key": key, "seen_q": sorted(seen)}
            )

    got = set(observed)
    for p, qc, key in sorted(got - expected):
        rec = {"kind": "unexpected", "p": p, "q": qc, "key": key}
        if any(
            k == key and ep == p and lens_homeomorphic_unoriented(LensSpace(p, qc), LensSpace(ep, eq))
            for ep, eq, k in expected
        ):
            rec["kind"] = "orientation-only"
        report.violations.append(rec)
    for p, qc, key in sorted(expected - got):
        report.violations.append({"kind": "missing", "p": p, "q": qc, "key": key})

    for member in sorted(got & expected):
        p, qc, key = member
        _, tuples = min(observed[member])
        report.equality_cases.append({"p": p, "q": qc, "key": key, "tuple": list(tuples[0])})
    report.violations.sort(key=_sort_key)
    return report


def d2_family(p_max: int) -> set[tuple[int, int, int]]:
    """{L(n d^2, n d c - 1) : 1 <= c <= d, gcd(c, d) = 1} as (p, q_canonical, d)."""
    fam = set()
    d = 1
    while d * d <= p_max:
        for n in range(1, p_max // (d * d) + 1):
            p = n * d * d
            if p < 2:
                continue
            for c in range(1, d + 1):
                if gcd(c, d) == 1:
                    canon = lens_canonical(LensSpace(p, n * d * c - 1))
                    fam.add((canon.p, canon.q, d))
        d += 1
    return fam


def fib_family(p_max: int) -> set[tuple[int, int, int]]:
    """{L(n F_{l+2}^2, n F_l F_{l+2} - 1) : n, l >= 1} as (p, q_canonical, l)."""
    fam = set()
    level = 1
    while fibonacci(level + 2) ** 2 <= p_max:
        f2, f0 = fibonacci(level + 2), fibonacci(level)
        for n in range(1, p_max // (f2 * f2) + 1):
            canon = lens_canonical(LensSpace(n * f2 * f2, n * f0 * f2 - 1))
            fam.add((canon.p, canon.q, level))
        level += 1
    return fam


def equality_census_d2(p_max: int, jobs: int = 1) -> ScanReport:
    """Lens spaces with a filling of |pi1| = d and b2 = p/d^2 - 1; key is d."""
    parts = _map_by_p(_d2_members_at, p_max, jobs)
    return _census("census-d2", p_max, parts, d2_family(p_max), unique=True)


def equality_census_fib(p_max: int, jobs: int = 1) -> ScanReport:
    """Lens spaces with a filling of |pi1| = F_{l+2} > 1 and b2 = len - l; key is l."""
    parts = _map_by_p(_fib_members_at, p_max, jobs)
    return _census("census-fib", p_max, parts, fib_family(p_max), unique=False)


# Continued-fraction statements.


def verify_fibonacci_extremal(l_max: int) -> ScanReport:
    """Among p/q with V(p/q) = L the largest p is F_{L+2}, at F_{L+2}/F_L and F_{L+2}/F_{L+1}."""
    report = ScanReport("fibonacci", l_max)
    level = [Fraction(2)]
    for L in range(1, l_max + 1):
        if L > 1:
            level = [op(f) for f in level for op in (op_S, op_T)]
        if len(set(level)) != 2 ** (L - 1):
            report.violations.append({"kind": "S/T words not injective", "L": L})
        for f in level:
            report.checked += 1
            if cf_V(f) != L:
                report.violations.append({"kind": "V != L", "L": L, "p": f.numerator, "q": f.denominator})
        top = max(f.numerator for f in level)
        maximizers = sorted({f for f in level if f.numerator == top})
        target = fibonacci(L + 2)
        expected = sorted({Fraction(target, fibonacci(L)), Fraction(target, fibonacci(L + 1))})
        if top != target or maximizers != expected:
            report.violations.append(
                {"kind": "maximizer mismatch", "L": L, "max": top, "maximizers": [f"{f.numerator}/{f.denominator}" for f in maximizers]}
            )
        report.equality_cases.append(
            {"L": L, "max": top, "maximizers": [f"{f.numerator}/{f.denominator}" for f in maximizers],
             "words": [st_decompose(f) for f in maximizers]}
        )
    return report


def _identities_at(p: int):
    checked, violations = 0, []
    for q in _coprime_pairs(p):
        checked += 1
        f, g = Fraction(p, q), Fraction(p, p - q)
        ln_f, u_f, v_f = cf_measures(f)
        ln_g, u_g, v_g = cf_measures(g)
        failed = []
        if v_f != v_g:
            failed.append("V(p/q) = V(p/(p-q))")
        if ln_f != u_g + 1:
            failed.append("len(p/q) = U(p/(p-q)) + 1")
        if ln_f + ln_g != v_f + 1:
            failed.append("len(p/q) + len(p/(p-q)) = V(p/q) + 1")
        if u_f + u_g != v_f - 1:
            failed.append("U(p/q) + U(p/(p-q)) = V(p/q) - 1")
        for what in failed:
            violations.append({"kind": what, "p": p, "q": q})
    return checked, violations, []


def verify_cf_identities(p_max: int, jobs: int = 1) -> ScanReport:
    return _merge(ScanReport("identities", p_max), _map_by_p(_identities_at, p_max, jobs))


VERIFIERS = {
    "thm-divisibility": verify_divisibility_bound,
    "thm-length": verify_length_bound,
    "census-d2": equality_census_d2,
    "census-fib": equality_census_fib,
    "identities": verify_cf_identities,
}


def run_all(p_max: int, l_max: int, jobs: int = 1) -> list[ScanReport]:
    reports = [VERIFIERS[name](p_max, jobs=jobs) for name in VERIFIERS]
    reports.append(verify_fibonacci_extremal(l_max))
    return reports
