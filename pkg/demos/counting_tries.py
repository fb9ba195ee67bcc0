"""
Counting tries with a fixed symbol distribution
===============================================

How many tries have n nodes with symbol c_i labeling n_i edges?  Exactly
(1/n) * prod_i C(n, n_i).  This script evaluates the closed formula and
confirms it against two independent enumerators: one generates every
binary degree matrix with those row weights (exactly n matrices per trie),
the other builds every trie directly by recursive construction.
"""
from xbwtrie import (SymbolDistribution, count_all_tries, count_tries_formula,
                     enumerate_matrices, enumerate_tries)

print(f"{'n':>3} {'counts':>12} {'formula':>9} {'matrices/n':>11} {'direct':>8}")
for n, counts in [(3, (1, 1)), (4, (2, 1)), (5, (2, 2)), (6, (1, 2, 2)),
                  (7, (1, 3, 2)), (8, (3, 2, 2))]:
    dist = SymbolDistribution(n, counts)
    formula = count_tries_formula(dist)
    matrices = sum(1 for _ in enumerate_matrices(dist))
    direct = sum(1 for _ in enumerate_tries(dist))
    print(f"{n:>3} {str(counts):>12} {formula:>9} {matrices // n:>11} {direct:>8}")
    assert matrices == n * formula == n * direct

# Summing the formula over all distributions recovers the classical count
# of n-node tries over a sigma-symbol alphabet, (1/n) C(n sigma, n - 1).
n, sigma = 6, 3
total = 0
for a in range(n):
    for b in range(n - a):
        c = n - 1 - a - b
        if c >= 0:
            total += count_tries_formula(SymbolDistribution(n, (a, b, c)))
print(f"\nsum over all distributions (n={n}, sigma={sigma}): {total}")
print(f"closed form (1/n) C(n*sigma, n-1):               {count_all_tries(n, sigma)}")
assert total == count_all_tries(n, sigma)
