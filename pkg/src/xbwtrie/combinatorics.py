"""Counting tries with a fixed symbol distribution via binary degree matrices.

A trie with n nodes where symbol c_i labels n_i edges maps injectively to a
sigma x n binary matrix whose j-th column is the out-label indicator of the
j-th pre-order node.  The matrices in the image are exactly those whose
column prefix sums form a Lukasiewicz path, and every matrix with the right
row weights has exactly one column rotation in the image.  Counting both
sides gives |tries| = (1/n) * prod C(n, n_i), evaluated here exactly and
cross-checked by two independent enumerators.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterator, Sequence

from .trie import Alphabet, SymbolDistribution, Trie

DEFAULT_ENUMERATION_CAP = 10**8

_DEFAULT_SYMBOLS = tuple(range(97, 97 + 26))  # 'a', 'b', ...


def _default_symbols(sigma: int) -> tuple[int, ...]:
    if sigma <= 26:
        return _DEFAULT_SYMBOLS[:sigma]
    return tuple(range(1, sigma + 1))


@dataclass(frozen=True)
class DegreeMatrix:
    """Binary sigma x n matrix with fixed row weights summing to n - 1.

    Rows are stored as packed integers, bit j holding column j (0-based).
    ``symbols`` names the rows so matrices can be inverted back to tries.
    """

    sigma: int
    n: int
    rows: tuple[int, ...]
    symbols: tuple[int, ...]
    row_counts: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        if self.sigma < 1 or self.n < 1:
            raise ValueError("sigma and n must be positive")
        if len(self.rows) != self.sigma or len(self.symbols) != self.sigma:
            raise ValueError("need one row and one symbol per character")
        if list(self.symbols) != sorted(set(self.symbols)):
            raise ValueError("symbols must be strictly increasing")
        mask = (1 << self.n) - 1
        if any(row & ~mask for row in self.rows):
            raise ValueError("row bits exceed n columns")
        counts = tuple(row.bit_count() for row in self.rows)
        if sum(counts) != self.n - 1:
            raise ValueError("total ones must be n - 1")
        object.__setattr__(self, "row_counts", counts)

    def column(self, j: int) -> tuple[int, ...]:
        """Column j (0-based) as a 0/1 tuple, one entry per row."""
        return tuple((row >> j) & 1 for row in self.rows)

    def column_ones(self, j: int) -> int:
        return sum((row >> j) & 1 for row in self.rows)

    def distribution(self) -> SymbolDistribution:
        return SymbolDistribution(self.n, self.row_counts)


def trie_to_matrix(trie: Trie) -> DegreeMatrix:
    """Out-label indicator matrix of the pre-order node sequence."""
    symbols = trie.alphabet.symbols
    if not symbols:
        # An edgeless trie still gets one (all-zero) row.
        return DegreeMatrix(1, trie.n, (0,), _default_symbols(1))
    index = {c: i for i, c in enumerate(symbols)}
    rows = [0] * len(symbols)
    for v in range(trie.n):
        for c in trie.out_labels(v):
            rows[index[c]] |= 1 << v
    return DegreeMatrix(len(symbols), trie.n, tuple(rows), symbols)


def d_sequence(matrix: DegreeMatrix) -> list[int]:
    """Per-column ones count minus one (out-degree minus one in pre-order)."""
    return [matrix.column_ones(j) - 1 for j in range(matrix.n)]


def l_sequence(matrix: DegreeMatrix) -> list[int]:
    """Prefix sums of the D sequence; the final entry is always -1."""
    out = []
    total = 0
    for d in d_sequence(matrix):
        total += d
        out.append(total)
    return out


def is_lukasiewicz(values: Sequence[int]) -> bool:
    """True iff the sequence ends at -1, stays nonnegative before that,
    and never steps down by more than one."""
    n = len(values)
    if n == 0:
        raise ValueError("sequence must be nonempty")
    if values[n - 1] != -1:
        return False
    for i in range(n - 1):
        if values[i] < 0:
            return False
        if values[i + 1] - values[i] < -1:
            return False
    return True


def matrix_to_trie(matrix: DegreeMatrix) -> Trie:
    """Invert the out-label matrix into the unique trie it encodes.

    Scanning columns left to right, each new node attaches to the deepest
    pending edge on the left; the j-th edge out of a node takes the j-th
    top-down one of that node's column.
    """
    if not is_lukasiewicz(l_sequence(matrix)):
        raise ValueError("matrix not in image of f")
    outsets = []
    for j in range(matrix.n):
        outsets.append(tuple(matrix.symbols[i]
                             for i in range(matrix.sigma)
                             if (matrix.rows[i] >> j) & 1))
    return Trie.from_preorder_outsets(outsets)


def rotate(matrix: DegreeMatrix, r: int) -> DegreeMatrix:
    """Cyclically move the last r columns to the front."""
    if r < 0:
        raise ValueError("rotation must be nonnegative")
    n = matrix.n
    r %= n
    if r == 0:
        return matrix
    mask = (1 << n) - 1
    rows = tuple(((row << r) | (row >> (n - r))) & mask for row in matrix.rows)
    return DegreeMatrix(matrix.sigma, n, rows, matrix.symbols)


def canonical_rotation(matrix: DegreeMatrix) -> int:
    """The unique r in [0, n-1] whose rotation has a Lukasiewicz L sequence.

    The valid rotation starts right after the first position where the
    prefix sums of D reach their minimum: later prefixes sit at or above
    the minimum and earlier ones strictly above it, which is exactly the
    nonnegativity condition after the shift.
    """
    n = matrix.n
    best = 0
    best_at = 0
    total = 0
    for i, d in enumerate(d_sequence(matrix), start=1):
        total += d
        if total < best:
            best = total
            best_at = i
    return (n - best_at) % n


def _check_cap(dist: SymbolDistribution, cap: int) -> int:
    total = 1
    for c in dist.counts:
        total *= math.comb(dist.n, c)
    if total > cap:
        raise ValueError("enumeration too large")
    return total


def enumerate_matrices(dist: SymbolDistribution,
                       cap: int = DEFAULT_ENUMERATION_CAP,
                       symbols: tuple[int, ...] | None = None,
                       ) -> Iterator[DegreeMatrix]:
    """All matrices with the given row weights, exactly once.

    Per-row column choices run in lexicographic order, with earlier rows
    varying slowest, so the stream order is reproducible.
    """
    _check_cap(dist, cap)
    n, sigma = dist.n, dist.sigma
    if symbols is None:
        symbols = _default_symbols(sigma)
    per_row = [combinations(range(n), c) for c in dist.counts]
    for choice in product(*per_row):
        rows = tuple(sum(1 << p for p in positions) for positions in choice)
        yield DegreeMatrix(sigma, n, rows, symbols)


def enumerate_tries(dist: SymbolDistribution,
                    cap: int = DEFAULT_ENUMERATION_CAP,
                    symbols: tuple[int, ...] | None = None,
                    ) -> Iterator[Trie]:
    """All tries with the given symbol distribution, by direct construction.

    Out-sets are chosen per pre-order node (subset bitmasks in increasing
    order), pruning any branch whose pending-edge count hits zero early:
    that is the interior Lukasiewicz condition turned into a bound.
    """
    _check_cap(dist, cap)
    n, sigma = dist.n, dist.sigma
    if sigma > 16:  # out-set choices are enumerated as subset masks
        raise ValueError("enumeration too large")
    if symbols is None:
        symbols = _default_symbols(sigma)
    masks = list(range(1 << sigma))
    mask_syms = [tuple(symbols[i] for i in range(sigma) if (m >> i) & 1)
                 for m in masks]
    mask_sizes = [m.bit_count() for m in masks]

    outsets: list[tuple[int, ...]] = [()] * n
    rem = list(dist.counts)

    def rec(i: int, avail: int) -> Iterator[Trie]:
        if i == n:
            yield Trie.from_preorder_outsets(outsets)
            return
        for m in masks:
            if any(rem[k] == 0 for k in range(sigma) if (m >> k) & 1):
                continue
            size = mask_sizes[m]
            nxt = avail - (1 if i > 0 else 0) + size
            if i < n - 1 and nxt < 1:
                continue
            if nxt > n - 1 - i:
                continue
            if i == n - 1 and nxt != 0:
                continue
            for k in range(sigma):
                if (m >> k) & 1:
                    rem[k] -= 1
            outsets[i] = mask_syms[m]
            yield from rec(i + 1, nxt)
            for k in range(sigma):
                if (m >> k) & 1:
                    rem[k] += 1
        outsets[i] = ()

    yield from rec(0, 0)


def count_tries_formula(dist: SymbolDistribution) -> int:
    """Exact number of tries with the given distribution: (1/n) prod C(n, n_i)."""
    total = 1
    for c in dist.counts:
        total *= math.comb(dist.n, c)
    q, r = divmod(total, dist.n)
    if r:
        raise ValueError("matrix count not divisible by n; distribution infeasible")
    return q


def count_all_tries(n: int, sigma: int) -> int:
    """Exact number of tries with n nodes over a sigma-symbol alphabet."""
    if n < 1 or sigma < 1:
        raise ValueError("n and sigma must be positive")
    q, r = divmod(math.comb(n * sigma, n - 1), n)
    if r:
        raise ValueError("unexpected remainder")
    return q


@dataclass(frozen=True)
class DistributionCheck:
    """Cross-check of one distribution: both enumerators against the formula."""

    dist: SymbolDistribution
    formula: int
    matrices: int
    tries: int
    rotations_ok: bool
    roundtrip_ok: bool

    @property
    def ok(self) -> bool:
        return (self.matrices == self.formula * self.dist.n
                and self.tries == self.formula
                and self.rotations_ok and self.roundtrip_ok)


def check_rotations(matrix: DegreeMatrix) -> bool:
    """All n column rotations distinct, with exactly one valid inversion."""
    n = matrix.n
    seen = set()
    lukas = 0
    for r in range(n):
        rot = rotate(matrix, r)
        seen.add(rot.rows)
        if is_lukasiewicz(l_sequence(rot)):
            lukas += 1
    return len(seen) == n and lukas == 1


def verify_distribution(dist: SymbolDistribution,
                        cap: int = DEFAULT_ENUMERATION_CAP,
                        rotations: bool = True,
                        roundtrip: bool = True) -> DistributionCheck:
    """Run the full counting cross-check for one distribution."""
    formula = count_tries_formula(dist)
    matrices = 0
    rot_ok = True
    for m in enumerate_matrices(dist, cap):
        matrices += 1
        if rotations and not check_rotations(m):
            rot_ok = False
    tries = 0
    rt_ok = True
    for t in enumerate_tries(dist, cap):
        tries += 1
        if roundtrip and matrix_to_trie(trie_to_matrix(t)) != t:
            rt_ok = False
    return DistributionCheck(dist, formula, matrices, tries, rot_ok, rt_ok)


def feasible_distributions(max_n: int, max_sigma: int) -> Iterator[SymbolDistribution]:
    """Every (n, counts) with n <= max_n and 1 <= sigma <= max_sigma,
    counts nonnegative and summing to n - 1, in a fixed order."""
    for n in range(1, max_n + 1):
        for sigma in range(1, max_sigma + 1):
            for counts in _compositions(n - 1, sigma):
                yield SymbolDistribution(n, counts)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


def format_matrix(matrix: DegreeMatrix) -> str:
    """Text dump: one 0/1 line per row, then the D and L integer lines."""
    lines = ["".join(str((row >> j) & 1) for j in range(matrix.n))
             for row in matrix.rows]
    lines.append("D: " + " ".join(str(d) for d in d_sequence(matrix)))
    lines.append("L: " + " ".join(str(v) for v in l_sequence(matrix)))
    return "\n".join(lines)
