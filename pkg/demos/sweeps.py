"""
Exhaustive sweeps
=================

The bounds on b2 checked over every filling of every lens space up to a
given p, and the equality cases compared with closed-form families.
"""

import time

from lensfill import run_all, verify_length_bound

if __name__ != "__main__":  # the worker pool re-imports this file on some platforms
    raise SystemExit

t0 = time.perf_counter()
for rep in run_all(p_max=120, l_max=12, jobs=2):
    print(f"{rep.name:18s} ok={rep.ok} checked={rep.checked} equality={len(rep.equality_cases)}")
print(f"{time.perf_counter() - t0:.1f}s")

# A few equality cases of the length bound with nontrivial pi1
rep = verify_length_bound(60)
for case in [c for c in rep.equality_cases if c["d"] > 1][:10]:
    print(case)
