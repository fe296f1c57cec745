"""
Zero continued fractions
========================

Tuples whose continued fraction is 0 and whose tridiagonal form is PSD of
corank at most one.  They all come from (0) by blowing up.
"""

from lensfill import blow_down, blow_up, det_M, enumerate_zero_tuples, is_admissible_zero, psd_rank

# Starting from (0)
t = (0,)
for slot in (0, 1, 1, 3):
    t = blow_up(t, slot)
    print(t, det_M(t), psd_rank(t))

# and back down, always at an entry 1
while len(t) > 1:
    t = blow_down(t, t.index(1) + 1)
    print(t)

# Counting: 1, 1, 2, 5, 14, 42, ...
print([len(enumerate_zero_tuples(k)) for k in range(1, 11)])

# (1,1,1) looks harmless but its matrix is not PSD.
print(is_admissible_zero((1, 1, 1)), psd_rank((1, 1, 1)))
print(sorted(enumerate_zero_tuples(4)))
