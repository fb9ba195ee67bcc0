"""Edge-labeled ordered tries over byte alphabets.

A trie here is a rooted tree whose edges carry byte labels, with the labels
of the edges leaving one node pairwise distinct and siblings ordered by
label.  Nodes are identified by dense integer ids 0..n-1 assigned in
pre-order, so the root is always node 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Alphabet:
    """Effective alphabet of a trie: the edge labels plus a sentinel.

    ``symbols`` are the byte values labeling at least one edge, ascending.
    ``sentinel`` is the smallest byte value not labeling any edge; in the
    symbol order used throughout, the sentinel precedes every symbol.
    """

    symbols: tuple[int, ...]
    sentinel: int

    def __post_init__(self):
        if any(not 0 <= s <= 255 for s in self.symbols):
            raise ValueError("symbols must be byte values")
        if list(self.symbols) != sorted(set(self.symbols)):
            raise ValueError("symbols must be strictly increasing")
        if self.sentinel in self.symbols:
            raise ValueError("sentinel must not be a symbol")

    @classmethod
    def from_symbols(cls, symbols: Iterable[int]) -> "Alphabet":
        syms = tuple(sorted(set(symbols)))
        used = set(syms)
        sentinel = next((b for b in range(256) if b not in used), None)
        if sentinel is None:
            raise ValueError("no sentinel available")
        return cls(syms, sentinel)

    @property
    def sigma(self) -> int:
        """Number of symbols, sentinel excluded."""
        return len(self.symbols)

    def full(self) -> tuple[int, ...]:
        """All characters in order: sentinel first, then symbols."""
        return (self.sentinel,) + self.symbols


@dataclass(frozen=True)
class SymbolDistribution:
    """Per-symbol edge counts of an n-node trie; counts sum to n - 1."""

    n: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        if len(self.counts) < 1:
            raise ValueError("at least one symbol count required")
        if any(c < 0 for c in self.counts):
            raise ValueError("counts must be nonnegative")
        if sum(self.counts) != self.n - 1:
            raise ValueError("counts must sum to n - 1")

    @property
    def sigma(self) -> int:
        return len(self.counts)


class Trie:
    """Immutable trie; build via :func:`build_from_strings` or classmethods."""

    __slots__ = ("n", "parent", "label", "children", "alphabet", "_paths")

    def __init__(self, parent: Sequence[int], label: Sequence[int],
                 alphabet: Alphabet | None = None):
        n = len(parent)
        if n == 0 or len(label) != n:
            raise ValueError("parent and label must be nonempty and equal length")
        if parent[0] != 0:
            raise ValueError("root must be node 0 and its own parent")
        kids: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for v in range(1, n):
            p = parent[v]
            if not 0 <= p < v:
                raise ValueError("node ids must be in pre-order (parent < child)")
            kids[p].append((label[v], v))
        for v in range(n):
            labs = [c for c, _ in kids[v]]
            if len(set(labs)) != len(labs):
                raise ValueError("outgoing labels must be distinct")
            if labs != sorted(labs):
                raise ValueError("children must be sorted by label")
        order = []
        stack = [0]
        while stack:
            v = stack.pop()
            order.append(v)
            for _, w in reversed(kids[v]):
                stack.append(w)
        if order != list(range(n)):
            raise ValueError("node ids must be in pre-order")
        if alphabet is None:
            alphabet = Alphabet.from_symbols(label[v] for v in range(1, n))
        self.n = n
        self.parent = tuple(parent)
        lab = list(label)
        lab[0] = alphabet.sentinel
        self.label = tuple(lab)
        self.children = tuple(tuple(k) for k in kids)
        self.alphabet = alphabet
        self._paths: tuple[bytes, ...] | None = None

    @classmethod
    def from_preorder_outsets(cls, outsets: Sequence[Sequence[int]],
                              alphabet: Alphabet | None = None) -> "Trie":
        """Rebuild a trie from the out-label sets of its pre-order nodes.

        Node i+1 in pre-order attaches to the deepest pending edge on the
        left, i.e. the most recent node that still has unused out-labels.
        """
        n = len(outsets)
        parent = [0] * n
        label = [0] * n
        # stack of (node, sorted out labels, next label index)
        stack: list[list] = []
        for v in range(n):
            if v > 0:
                while stack and stack[-1][2] >= len(stack[-1][1]):
                    stack.pop()
                if not stack:
                    raise ValueError("out-degree sequence leaves node unattached")
                top = stack[-1]
                parent[v] = top[0]
                label[v] = top[1][top[2]]
                top[2] += 1
                if top[2] >= len(top[1]):
                    stack.pop()
            out = sorted(outsets[v])
            if out:
                stack.append([v, out, 0])
        if stack:
            raise ValueError("pending edges left over")
        return cls(parent, label, alphabet)

    @classmethod
    def from_parent_labels(cls, parent: Sequence[int], label: Sequence[int],
                           root: int, alphabet: Alphabet | None = None) -> "Trie":
        """Build from arbitrary node ids, renumbering into pre-order."""
        n = len(parent)
        kids: dict[int, list[tuple[int, int]]] = {v: [] for v in range(n)}
        for v in range(n):
            if v != root:
                kids[parent[v]].append((label[v], v))
        for v in kids:
            kids[v].sort()
        order: list[int] = []
        stack = [root]
        while stack:
            v = stack.pop()
            order.append(v)
            for _, w in reversed(kids[v]):
                stack.append(w)
        if len(order) != n:
            raise ValueError("nodes not all reachable from root")
        newid = {old: i for i, old in enumerate(order)}
        new_parent = [newid[parent[old]] if old != root else 0 for old in order]
        new_label = [label[old] if old != root else 0 for old in order]
        return cls(new_parent, new_label, alphabet)

    def out_labels(self, v: int) -> tuple[int, ...]:
        return tuple(c for c, _ in self.children[v])

    def child(self, v: int, c: int) -> int | None:
        for lab, w in self.children[v]:
            if lab == c:
                return w
        return None

    def paths(self) -> tuple[bytes, ...]:
        """Root-to-node label strings; the root's path is empty."""
        if self._paths is None:
            out = [b""] * self.n
            for v in range(1, self.n):
                out[v] = out[self.parent[v]] + bytes([self.label[v]])
            self._paths = tuple(out)
        return self._paths

    def depth(self, v: int) -> int:
        return len(self.paths()[v])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Trie):
            return NotImplemented
        return self.parent == other.parent and self.label == other.label

    def __hash__(self) -> int:
        return hash((self.parent, self.label))

    def __repr__(self) -> str:
        return f"Trie(n={self.n}, sigma={self.alphabet.sigma})"


def build_from_strings(strings: Sequence[bytes]) -> Trie:
    """Trie of all prefixes of the given byte strings (the empty prefix is the root)."""
    if not list(strings):
        raise ValueError("no strings")
    root: dict = {}
    for s in strings:
        node = root
        for b in s:
            node = node.setdefault(b, {})
    parent = [0]
    label = [0]
    work: list[tuple[dict, int, int]] = []
    for b in sorted(root, reverse=True):
        work.append((root[b], 0, b))
    while work:
        node, pid, b = work.pop()
        vid = len(parent)
        parent.append(pid)
        label.append(b)
        for nb in sorted(node, reverse=True):
            work.append((node[nb], vid, nb))
    symbols: set[int] = set()
    for s in strings:
        symbols.update(s)
    return Trie(parent, label, Alphabet.from_symbols(symbols))


def preorder(trie: Trie) -> list[int]:
    """Node ids in depth-first pre-order, children visited in label order."""
    order: list[int] = []
    stack = [0]
    while stack:
        v = stack.pop()
        order.append(v)
        for _, w in reversed(trie.children[v]):
            stack.append(w)
    return order


def colex_order(trie: Trie) -> list[int]:
    """Node ids sorted by the co-lexicographic order of their incoming paths.

    Paths are compared right to left with the empty string smallest, so the
    root always comes first.
    """
    paths = trie.paths()
    return sorted(range(trie.n), key=lambda v: paths[v][::-1])


def context(trie: Trie, node: int, k: int) -> bytes:
    """Last k symbols of the root-to-node path, sentinel-padded on the left."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return b""
    path = trie.paths()[node]
    if len(path) >= k:
        return path[-k:]
    return bytes([trie.alphabet.sentinel]) * (k - len(path)) + path


def naive_count(trie: Trie, pattern: bytes) -> int:
    """Number of nodes whose incoming path ends with ``pattern``, by full traversal."""
    if trie.alphabet.sentinel in pattern:
        raise ValueError("pattern contains sentinel")
    m = len(pattern)
    if m == 0:
        return trie.n
    paths = trie.paths()
    return sum(1 for v in range(trie.n)
               if len(paths[v]) >= m and paths[v][-m:] == pattern)


def symbol_distribution(trie: Trie) -> SymbolDistribution:
    """Edge counts per alphabet symbol; a single-node trie reports one zero count."""
    if trie.alphabet.sigma == 0:
        return SymbolDistribution(trie.n, (0,))
    index = {c: i for i, c in enumerate(trie.alphabet.symbols)}
    counts = [0] * trie.alphabet.sigma
    for v in range(1, trie.n):
        counts[index[trie.label[v]]] += 1
    return SymbolDistribution(trie.n, tuple(counts))


def strings_from_bytes(data: bytes) -> list[bytes]:
    """Parse the newline-delimited string-set format (LF terminated, no escapes)."""
    if data == b"":
        return []
    parts = data.split(b"\n")
    if data.endswith(b"\n"):
        parts.pop()
    return parts
