"""Exhaustive enumeration at small sizes, and the unstructured oracle.

The enumerator is the ground truth for everything the rest of the library
claims: it scans every one of the N**n words of a given size.  The
reducibility oracle is its companion: a literal search over all
arrangements, splits and boundary pairs, used to cross-check the fast
structured decider.

Run:  python3 demos/03_exhaustive_census.py
"""

from cwlab import (
    EnumerationQuery,
    Modulus,
    enumerate_solutions,
    is_reducible_monomial,
    is_reducible_oracle,
    minimal_monomial_size,
    word,
)

m = Modulus(6)
for size in (2, 3, 4):
    census = enumerate_solutions(EnumerationQuery(m, size))
    print(f"N=6, size {size}: {census.total} solutions")
    for w in census.words:
        print(f"  {w.values}")
print()

# Deduplication by canonical form collapses rotation/reversal classes.
census = enumerate_solutions(EnumerationQuery(m, 4, dedup=True))
print(f"N=6, size 4 up to equivalence: {len(census.words)} classes "
      f"of {census.total} words")
print()

# Structured decider vs literal oracle on a minimal all-k solution.
n, k = 10, 3
h, _sign = minimal_monomial_size(n, k)
target = word([k] * h, n)
structured, certificate = is_reducible_monomial(n, k)
oracle, witness = is_reducible_oracle(target)
print(f"N={n}, k={k}: minimal all-{k} solution has length {h}")
print(f"  structured decider: reducible={structured}, "
      f"{certificate.summary()}")
left, right, _arrangement = witness
print(f"  literal oracle:     reducible={oracle}, "
      f"witness {left.values} (+) {right.values}")
