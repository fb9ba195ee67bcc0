"""
Degree matrices, Lukasiewicz paths, and the rotation trick
==========================================================

A trie maps to a binary matrix whose j-th column marks the out-labels of
the j-th pre-order node.  Prefix-summing (column weight - 1) gives the L
sequence; the matrix inverts back to a trie exactly when L is a
Lukasiewicz path (nonnegative until the final -1).  Any matrix with the
right row weights has exactly one column rotation with that property,
which is why the number of tries is the number of matrices divided by n.
"""
from xbwtrie import (DegreeMatrix, canonical_rotation, format_matrix,
                     is_lukasiewicz, l_sequence, matrix_to_trie, rotate)


def from_strings(rows):
    packed = tuple(sum(1 << j for j, ch in enumerate(r) if ch == "1")
                   for r in rows)
    return DegreeMatrix(len(rows), len(rows[0]), packed, (97, 98, 99))


start = from_strings(["0100000",
                      "1000110",
                      "0100010"])

print("a 3x7 matrix with row weights (1, 3, 2):\n")
print(format_matrix(start))
print("\nLukasiewicz?", is_lukasiewicz(l_sequence(start)))
try:
    matrix_to_trie(start)
except ValueError as exc:
    print("inversion fails:", exc)

r = canonical_rotation(start)
fixed = rotate(start, r)
print(f"\nrotating the last {r} columns to the front:\n")
print(format_matrix(fixed))
print("\nLukasiewicz?", is_lukasiewicz(l_sequence(fixed)))

trie = matrix_to_trie(fixed)
print(f"\ninverts to a trie with {trie.n} nodes; edges in pre-order:")
for v in range(1, trie.n):
    print(f"  {trie.parent[v] + 1} -{chr(trie.label[v])}-> {v + 1}")

# Only this single rotation works: the other six all fail.
valid = [k for k in range(7) if is_lukasiewicz(l_sequence(rotate(start, k)))]
print("\nvalid rotations:", valid)
