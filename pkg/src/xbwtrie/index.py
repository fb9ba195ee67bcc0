"""Count-query index over the XBWT of a trie.

The nodes are sorted by the co-lexicographic order of their incoming paths;
one bitvector per symbol marks which sorted nodes have an outgoing edge with
that symbol, and the C array locates each symbol's block of incoming edges.
A pattern is matched by forward search: one rank-pair per symbol maps the
interval of nodes reached by p to the interval reached by p plus one symbol.
"""
from __future__ import annotations

import math
import struct
from dataclasses import dataclass

from .succinct import (BACKEND_TAGS, Bitvector, deserialize_bitvector,
                       make_bitvector, serialize_bitvector)
from .trie import Alphabet, Trie, colex_order

MODES = ("plain", "fid", "id", "fixedblock")
_MODE_TO_KIND = {"plain": "plain", "fid": "rrr", "id": "id",
                 "fixedblock": "fixedblock"}
_KIND_TO_MODE = {v: k for k, v in _MODE_TO_KIND.items()}

MAGIC = b"XBWT"
VERSION = 1


@dataclass(frozen=True)
class NodeInterval:
    """Inclusive interval of 1-based co-lex node ranks; empty when lo > hi."""

    lo: int
    hi: int

    @property
    def empty(self) -> bool:
        return self.lo > self.hi

    def __len__(self) -> int:
        return max(0, self.hi - self.lo + 1)


@dataclass(frozen=True)
class RunCounts:
    """Total number of symbol runs and the per-symbol breakdown."""

    total: int
    by_symbol: dict[int, int]


class XbwtIndex:
    """Searchable XBWT: C array plus one rank/select bitvector per symbol."""

    __slots__ = ("n", "alphabet", "mode", "c_array", "vectors", "_sym")

    def __init__(self, n: int, alphabet: Alphabet, mode: str,
                 c_array: tuple[int, ...], vectors: tuple[Bitvector, ...]):
        if mode not in MODES:
            raise ValueError(f"unknown mode {mode!r}")
        if len(c_array) != alphabet.sigma + 1 or c_array[0] != 0:
            raise ValueError("C array must cover the sentinel slot first")
        if len(vectors) != alphabet.sigma:
            raise ValueError("need one bitvector per non-sentinel symbol")
        self.n = n
        self.alphabet = alphabet
        self.mode = mode
        self.c_array = c_array
        self.vectors = vectors
        self._sym = {c: (c_array[i + 1], vectors[i])
                     for i, c in enumerate(alphabet.symbols)}

    @property
    def sigma(self) -> int:
        """Full alphabet size, sentinel included."""
        return self.alphabet.sigma + 1


def resolve_mode(mode: str, n: int, sigma_full: int, eps: float = 0.5) -> str:
    """'auto' picks the FID back-end for small alphabets, ID otherwise."""
    if mode != "auto":
        return mode
    logn = math.log2(n) if n > 1 else 1.0
    return "fid" if sigma_full <= max(1.0, logn) ** eps else "id"


def default_block_size(n: int, sigma_eff: int) -> int:
    logn = math.ceil(math.log2(n)) if n > 1 else 1
    return max(1, max(1, sigma_eff) * logn * logn)


def build_index(trie: Trie, mode: str = "auto", *, block_size: int | None = None,
                codec: str = "id", eps: float = 0.5,
                complement_heavy: bool = True) -> XbwtIndex:
    """Index the trie with the selected bitvector back-end.

    In ID mode a symbol occurring on more than half the nodes is stored as
    its complement, which changes the measured size but no query answer.
    """
    n = trie.n
    alphabet = trie.alphabet
    mode = resolve_mode(mode, n, alphabet.sigma + 1, eps)
    co = colex_order(trie)
    ones: dict[int, list[int]] = {c: [] for c in alphabet.symbols}
    for rank_pos, v in enumerate(co, start=1):
        for c in trie.out_labels(v):
            ones[c].append(rank_pos)
    c_array = [0]
    cum = 0
    vectors = []
    kind = _MODE_TO_KIND[mode]
    if mode == "fixedblock" and block_size is None:
        block_size = default_block_size(n, alphabet.sigma)
    for c in alphabet.symbols:
        c_array.append(cum + 1)
        cum += len(ones[c])
        complemented = (mode == "id" and complement_heavy
                        and len(ones[c]) > n / 2)
        vectors.append(make_bitvector(kind, n, ones[c], b=block_size,
                                      codec=codec, complemented=complemented))
    return XbwtIndex(n, alphabet, mode, tuple(c_array), tuple(vectors))


def forward_step(index: XbwtIndex, iv: NodeInterval, c: int) -> NodeInterval:
    """Interval of nodes reached by extending the current pattern with c."""
    if iv.empty or iv.lo < 1 or iv.hi > index.n:
        raise ValueError("interval must be nonempty and within [1, n]")
    if c == index.alphabet.sentinel:
        raise ValueError("pattern contains sentinel")
    ent = index._sym.get(c)
    if ent is None:
        return NodeInterval(1, 0)
    base, vec = ent
    return NodeInterval(base + vec.rank(iv.lo - 1) + 1, base + vec.rank(iv.hi))


def count(index: XbwtIndex, pattern: bytes) -> int:
    """Number of trie nodes whose incoming path ends with ``pattern``."""
    sentinel = index.alphabet.sentinel
    sym = index._sym
    lo, hi = 1, index.n
    for c in pattern:
        if c == sentinel:
            raise ValueError("pattern contains sentinel")
        ent = sym.get(c)
        if ent is None:
            return 0
        base, vec = ent
        lo, hi = base + vec.rank(lo - 1) + 1, base + vec.rank(hi)
        if lo > hi:
            return 0
    return hi - lo + 1


def ith_child(index: XbwtIndex, j: int, i: int) -> int | None:
    """Co-lex rank of the i-th child (in label order) of the rank-j node.

    Scans the symbols in order, testing membership with a partial-rank
    query; the i-th hit is followed by one forward step.  None when the
    node has fewer than i children.
    """
    if not 1 <= j <= index.n:
        raise ValueError("position out of range")
    if i < 1:
        raise ValueError("child ordinal must be positive")
    seen = 0
    for k, c in enumerate(index.alphabet.symbols):
        pr = index.vectors[k].prank(j)
        if pr != -1:
            seen += 1
            if seen == i:
                return index.c_array[k + 1] + pr
    return None


def run_count(index: XbwtIndex) -> RunCounts:
    """Number of positions where a symbol's run of out-edges ends."""
    by_symbol: dict[int, int] = {}
    total = 0
    for c, vec in zip(index.alphabet.symbols, index.vectors):
        runs = 0
        prev = -2
        for p in vec.one_positions():
            if p != prev + 1:
                runs += 1
            prev = p
        by_symbol[c] = runs
        total += runs
    return RunCounts(total, by_symbol)


def leaf_run_count(index: XbwtIndex) -> int:
    """Number of maximal co-lex runs of leaves (nodes with no out-edges)."""
    internal = bytearray(index.n + 1)
    for vec in index.vectors:
        for p in vec.one_positions():
            internal[p] = 1
    runs = 0
    in_run = False
    for p in range(1, index.n + 1):
        if not internal[p]:
            if not in_run:
                runs += 1
            in_run = True
        else:
            in_run = False
    return runs


def invert(index: XbwtIndex) -> Trie:
    """Rebuild the unique trie whose XBWT matches the stored vectors.

    The children reached by symbol c occupy co-lex ranks C[c]+1 .. C[c]+n_c
    in order of their parents' ranks, so parent-of-rank is select on B_c.
    """
    n = index.n
    counts = [vec.ones for vec in index.vectors]
    cum = 0
    for i, c in enumerate(index.alphabet.symbols):
        if index.c_array[i + 1] != cum + 1:
            raise ValueError("not a valid XBWT")
        cum += counts[i]
    if cum != n - 1:
        raise ValueError("not a valid XBWT")
    parent = [0] * n  # 0-based ids are colex rank - 1
    label = [0] * n
    for i, c in enumerate(index.alphabet.symbols):
        base = index.c_array[i + 1]
        vec = index.vectors[i]
        for j in range(1, counts[i] + 1):
            child = base + j - 1  # 0-based id of rank base + j
            parent[child] = vec.select(j) - 1
            label[child] = c
    try:
        return Trie.from_parent_labels(parent, label, root=0)
    except ValueError as exc:
        raise ValueError("not a valid XBWT") from exc


# ---------------------------------------------------------------------------
# file format
# ---------------------------------------------------------------------------

_CRC_TABLE = []
for _b in range(256):
    _c = _b
    for _ in range(8):
        _c = (_c >> 1) ^ 0x82F63B78 if _c & 1 else _c >> 1
    _CRC_TABLE.append(_c)


def crc32c(data: bytes, crc: int = 0) -> int:
    c = crc ^ 0xFFFFFFFF
    for byte in data:
        c = (c >> 8) ^ _CRC_TABLE[(c ^ byte) & 0xFF]
    return c ^ 0xFFFFFFFF


def serialize(index: XbwtIndex) -> bytes:
    sigma_full = index.sigma
    out = [MAGIC,
           struct.pack("<HH", VERSION, BACKEND_TAGS[_MODE_TO_KIND[index.mode]]),
           struct.pack("<QH", index.n, sigma_full),
           bytes(index.alphabet.full()),
           struct.pack(f"<{sigma_full}Q", *index.c_array)]
    for vec in index.vectors:
        out.append(serialize_bitvector(vec))
    body = b"".join(out)
    return body + struct.pack("<I", crc32c(body))


def deserialize(data: bytes) -> XbwtIndex:
    if len(data) < len(MAGIC) + 4 + 10 + 4:
        raise ValueError("truncated")
    if data[:4] != MAGIC:
        raise ValueError("bad magic")
    version, flags = struct.unpack_from("<HH", data, 4)
    if version != VERSION:
        raise ValueError(f"version mismatch: {version}")
    if crc32c(data[:-4]) != struct.unpack_from("<I", data, len(data) - 4)[0]:
        raise ValueError("checksum failure")
    body = data[:-4]
    off = 8
    n, sigma_full = struct.unpack_from("<QH", body, off)
    off += 10
    if sigma_full < 1 or off + sigma_full > len(body):
        raise ValueError("truncated")
    chars = body[off:off + sigma_full]
    off += sigma_full
    if off + 8 * sigma_full > len(body):
        raise ValueError("truncated")
    c_array = struct.unpack_from(f"<{sigma_full}Q", body, off)
    off += 8 * sigma_full
    alphabet = Alphabet(tuple(chars[1:]), chars[0])
    tag_to_kind = {v: k for k, v in BACKEND_TAGS.items()}
    mode = _KIND_TO_MODE.get(tag_to_kind.get(flags, ""))
    if mode is None:
        raise ValueError(f"unknown back-end flags {flags}")
    vectors = []
    for _ in range(sigma_full - 1):
        vec, off = deserialize_bitvector(body, off)
        if vec.m != n:
            raise ValueError("bitvector length mismatch")
        vectors.append(vec)
    if off != len(body):
        raise ValueError("trailing bytes in index body")
    return XbwtIndex(n, alphabet, mode, tuple(c_array), tuple(vectors))
