"""
Continued fractions and S/T words
=================================

Minus-sign continued fractions with all entries >= 2, their three size
measures, and the two generating moves.
"""

from fractions import Fraction

from lensfill import apply_word, cf_measures, convergents, hj_expand, st_decompose

# Expanding a rational

f = Fraction(8, 3)
t = hj_expand(f)
print(f, "=", list(t))

# convergent pairs build the value back up without any division
print(convergents(t))

# len, U and V.  V - len = U always.
for g in (Fraction(2), Fraction(8, 3), Fraction(8, 5), Fraction(9, 7)):
    print(g, hj_expand(g), cf_measures(g))

# S adds one to the first entry, T puts a 2 in front.  Every rational > 1
# is exactly one word applied to 2/1.

for g in (Fraction(8, 3), Fraction(9, 7), Fraction(21, 13)):
    w = st_decompose(g)
    print(g, w, apply_word(w) == g)

# Words of a fixed length V - 1 give exactly the rationals with that V.
# The largest numerator among them is a Fibonacci number.

V = 7
best = {}
for code in range(2 ** (V - 1)):
    word = "".join("ST"[(code >> i) & 1] for i in range(V - 1))
    g = apply_word(word)
    best.setdefault(g.numerator, []).append(g)
top = max(best)
print("V =", V, "max numerator", top, "attained by", sorted(best[top]))
