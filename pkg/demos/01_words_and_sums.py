"""Tour of the word algebra: matrices, the solution test, sums, equivalence.

Run:  python3 demos/01_words_and_sums.py
"""

from cwlab import (
    Modulus,
    canonical_form,
    equivalent,
    is_solution,
    oplus,
    word,
    word_matrix,
)

m = Modulus(10)

# A word (a_1, ..., a_n) maps to E(a_n) ... E(a_1) with E(k) = [[k,-1],[1,0]].
# It is a "solution" when that product is plus or minus the identity.
w = word([8, 3, 3, 3, 8], m)
print(f"word {w.values} over Z/{m.n}Z")
print(f"  matrix {word_matrix(w).rows()}")
print(f"  is_solution -> sign {is_solution(w)}")
print()

# The boundary sum glues two words, adding the boundary entries together:
# lengths n and m combine to n + m - 2.
a = word([3, 2, 1], m)
b = word([1, 2, 3], m)
print(f"{a.values} (+) {b.values} = {oplus(a, b).values}")
print(f"{b.values} (+) {a.values} = {oplus(b, a).values}   (not commutative)")
print()

# Summing with the solution (0,0) changes nothing (up to rotation on the
# left), and more generally: with b a solution, a (+) b is a solution
# exactly when a is.
zero = word([0, 0], m)
print(f"{a.values} (+) (0,0) = {oplus(a, zero).values}")
five = word([3] * 5, m)
print(f"all-3 word of length 5: solution? {is_solution(five) is not None}")
print(f"after summing with {w.values}: "
      f"{is_solution(oplus(five, w)) is not None}")
print()

# Equivalence is equality up to rotation and reversal; the canonical form
# is the lexicographically smallest arrangement and is a perfect dedup key.
u = word([1, 2, 3], m)
v = word([3, 2, 1], m)
print(f"{u.values} ~ {v.values}: {equivalent(u, v)}")
print(f"canonical form of (3,1,2): {canonical_form(word([3, 1, 2], m)).values}")
