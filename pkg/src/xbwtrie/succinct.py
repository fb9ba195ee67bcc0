"""Rank/select bitvector back-ends with measured-bit accounting.

Four interchangeable representations of a static bitvector:

* ``PlainBitvector``   -- packed words plus a two-level rank directory.
* ``RrrVector``        -- per-block class/offset coding (the FID back-end);
                          each u-bit block is stored as its popcount plus the
                          lexicographic rank of its pattern among same-weight
                          words, in ceil(log C(u, class)) bits.
* ``IdVector``         -- explicit one-positions supporting select directly
                          and rank by binary search; optionally stores the
                          complement when ones dominate.
* ``FixedBlockVector`` -- fixed-size blocks, each encoded by an inner ID or
                          RRR vector, plus a precomputed block-rank table.

Positions are 1-based; ``rank(i)`` counts ones in positions 1..i inclusive
and ``rank(0) == 0``.  All structures are immutable once built.
"""
from __future__ import annotations

import math
import struct
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class BitCost:
    """Measured size split into entropy payload and directory overhead."""

    payload: int
    overhead: int

    @property
    def total(self) -> int:
        return self.payload + self.overhead


def ceil_log2_comb(n: int, k: int) -> int:
    """ceil(log2 C(n, k)) computed exactly."""
    return (math.comb(n, k) - 1).bit_length()


def _bits_int(m: int, ones: Iterable[int]) -> int:
    """Pack 1-based positions into an integer, bit i-1 holding position i."""
    v = 0
    for p in ones:
        if not 1 <= p <= m:
            raise ValueError("one-position out of range")
        v |= 1 << (p - 1)
    return v


def parse_bits(s: str) -> tuple[int, tuple[int, ...]]:
    """Helper turning a '0'/'1' string into (length, one-positions)."""
    return len(s), tuple(i + 1 for i, c in enumerate(s) if c == "1")


# ---------------------------------------------------------------------------
# block codec shared by the RRR-style back-ends
# ---------------------------------------------------------------------------

def encode_block(pattern: int, u: int) -> tuple[int, int]:
    """(class, offset) of a u-bit pattern; offset is the lexicographic rank
    of the pattern string (position 1 first, '0' < '1') among same-weight
    strings."""
    k = pattern.bit_count()
    offset = 0
    ones_left = k
    for pos in range(u):
        if (pattern >> pos) & 1:
            offset += math.comb(u - pos - 1, ones_left)
            ones_left -= 1
    return k, offset


def decode_block(cls: int, offset: int, u: int) -> int:
    """Inverse of :func:`encode_block`."""
    pattern = 0
    k = cls
    for pos in range(u):
        zeros_first = math.comb(u - pos - 1, k)
        if offset >= zeros_first:
            pattern |= 1 << pos
            offset -= zeros_first
            k -= 1
    if k or offset:
        raise ValueError("offset out of range for class")
    return pattern


_DECODE_TABLES: dict[int, list[list[int]]] = {}
_TABLE_MAX_U = 14


def _decode_table(u: int) -> list[list[int]]:
    tables = _DECODE_TABLES.get(u)
    if tables is None:
        tables = [[] for _ in range(u + 1)]
        order = sorted(range(1 << u),
                       key=lambda w: tuple((w >> p) & 1 for p in range(u)))
        for w in order:
            tables[w.bit_count()].append(w)
        _DECODE_TABLES[u] = tables
    return tables


def _decode(cls: int, offset: int, u: int) -> int:
    if u <= _TABLE_MAX_U:
        return _decode_table(u)[cls][offset]
    return decode_block(cls, offset, u)


# ---------------------------------------------------------------------------
# back-ends
# ---------------------------------------------------------------------------

class Bitvector:
    """Common 1-based query surface; concrete back-ends fill in the storage."""

    kind: str
    m: int
    ones: int

    # entropy-block parameters used by the space-bound checks; None marks a
    # back-end that stores raw bits rather than entropy-coded blocks.
    entropy_block_size: int | None = None
    entropy_block_count: int = 0

    def rank(self, i: int) -> int:
        raise NotImplementedError

    def select(self, i: int) -> int:
        raise NotImplementedError

    def access(self, i: int) -> int:
        raise NotImplementedError

    def prank(self, i: int) -> int:
        """rank(i) when position i holds a 1, else -1."""
        if not 1 <= i <= self.m:
            raise ValueError("position out of range")
        return self.rank(i) if self.access(i) else -1

    def payload_bits(self) -> BitCost:
        raise NotImplementedError

    def _check_rank_arg(self, i: int) -> None:
        if not 0 <= i <= self.m:
            raise ValueError("position out of range")

    def _check_select_arg(self, i: int) -> None:
        if not 1 <= i <= self.ones:
            raise ValueError("select index out of range")

    def one_positions(self) -> list[int]:
        return [self.select(i) for i in range(1, self.ones + 1)]

    def __len__(self) -> int:
        return self.m


class PlainBitvector(Bitvector):
    """Packed words with superblock absolute / block relative rank counts."""

    kind = "plain"
    WORD = 64
    SB_WORDS = 8

    __slots__ = ("m", "ones", "_bits", "_words", "_super", "_block")

    def __init__(self, m: int, ones: Iterable[int]):
        if m < 0:
            raise ValueError("length must be nonnegative")
        self.m = m
        self._bits = _bits_int(m, ones)
        self.ones = self._bits.bit_count()
        nwords = (m + self.WORD - 1) // self.WORD
        mask = (1 << self.WORD) - 1
        self._words = [(self._bits >> (w * self.WORD)) & mask
                       for w in range(nwords)]
        self._super: list[int] = []
        self._block: list[int] = []
        total = 0
        rel = 0
        for w in range(nwords + 1):
            if w % self.SB_WORDS == 0:
                self._super.append(total)
                rel = 0
            self._block.append(rel)
            if w < nwords:
                c = self._words[w].bit_count()
                total += c
                rel += c
        self._super.append(total)  # sentinel for the select search

    def rank(self, i: int) -> int:
        self._check_rank_arg(i)
        if i == 0:
            return 0
        f, rem = divmod(i, self.WORD)
        c = self._super[f // self.SB_WORDS] + self._block[f]
        if rem:
            c += (self._words[f] & ((1 << rem) - 1)).bit_count()
        return c

    def access(self, i: int) -> int:
        if not 1 <= i <= self.m:
            raise ValueError("position out of range")
        return (self._bits >> (i - 1)) & 1

    def select(self, i: int) -> int:
        self._check_select_arg(i)
        lo, hi = 0, len(self._super) - 1
        while lo < hi:  # last superblock with count < i
            mid = (lo + hi + 1) // 2
            if self._super[mid] < i:
                lo = mid
            else:
                hi = mid - 1
        t = i - self._super[lo]
        w = lo * self.SB_WORDS
        while True:
            c = self._words[w].bit_count()
            if t <= c:
                break
            t -= c
            w += 1
        word = self._words[w]
        pos = 0
        while True:
            if (word >> pos) & 1:
                t -= 1
                if t == 0:
                    return w * self.WORD + pos + 1
            pos += 1

    def select0(self, i: int) -> int:
        """Position of the i-th zero, by binary search over zero-rank."""
        zeros = self.m - self.ones
        if not 1 <= i <= zeros:
            raise ValueError("select index out of range")
        lo, hi = 1, self.m
        while lo < hi:
            mid = (lo + hi) // 2
            if mid - self.rank(mid) >= i:
                hi = mid
            else:
                lo = mid + 1
        return lo

    def rank0(self, i: int) -> int:
        self._check_rank_arg(i)
        return i - self.rank(i)

    def payload_bits(self) -> BitCost:
        width_abs = max(1, (self.m).bit_length())
        nwords = len(self._words)
        sb = nwords // self.SB_WORDS + 1
        width_rel = max(1, (self.SB_WORDS * self.WORD).bit_length())
        return BitCost(self.m, sb * width_abs + (nwords + 1) * width_rel)


class RrrVector(Bitvector):
    """FID back-end: class/offset coded blocks with rank and select support."""

    kind = "rrr"
    SB_BLOCKS = 8
    SELECT_SAMPLE = 512

    __slots__ = ("m", "ones", "u", "classes", "offsets", "_lens",
                 "_sb_rank", "_sel_sample", "_payload",
                 "entropy_block_size", "entropy_block_count")

    def __init__(self, m: int, ones: Iterable[int], u: int | None = None):
        bits = _bits_int(m, ones)
        if u is None:
            u = max(1, (max(m, 1).bit_length() - 1) // 2)
        u = max(1, min(24, u))
        nblocks = max(1, (m + u - 1) // u) if m else 0
        classes = []
        offsets = []
        lens = []
        for b in range(nblocks):
            blen = min(u, m - b * u)
            pat = (bits >> (b * u)) & ((1 << blen) - 1)
            cls, off = encode_block(pat, blen)
            classes.append(cls)
            offsets.append(off)
            lens.append(blen)
        self._init_from_encoding(m, u, classes, offsets, lens)

    @classmethod
    def _from_encoding(cls, m: int, u: int, classes: list[int],
                       offsets: list[int]) -> "RrrVector":
        self = cls.__new__(cls)
        nblocks = max(1, (m + u - 1) // u) if m else 0
        if len(classes) != nblocks or len(offsets) != nblocks:
            raise ValueError("wrong number of blocks")
        lens = [min(u, m - b * u) for b in range(nblocks)]
        self._init_from_encoding(m, u, classes, offsets, lens)
        return self

    def _init_from_encoding(self, m, u, classes, offsets, lens):
        self.m = m
        self.u = u
        self.classes = tuple(classes)
        self.offsets = tuple(offsets)
        self._lens = tuple(lens)
        for b, (cls, blen) in enumerate(zip(classes, lens)):
            if not 0 <= cls <= blen or offsets[b] >= math.comb(blen, cls):
                raise ValueError("invalid block encoding")
        self.ones = sum(classes)
        nblocks = len(classes)
        nsb = max(1, (nblocks + self.SB_BLOCKS - 1) // self.SB_BLOCKS)
        self._sb_rank = [0]
        for s in range(1, nsb + 1):
            end = min(s * self.SB_BLOCKS, nblocks)
            start = (s - 1) * self.SB_BLOCKS
            self._sb_rank.append(self._sb_rank[-1] + sum(classes[start:end]))
        self._sel_sample = []
        for t in range(0, self.ones, self.SELECT_SAMPLE):
            # superblock containing the (t+1)-th one
            s = bisect_right(self._sb_rank, t) - 1
            self._sel_sample.append(min(s, nsb - 1))
        self._payload = sum(ceil_log2_comb(blen, cls)
                            for blen, cls in zip(lens, classes))
        self.entropy_block_size = u
        self.entropy_block_count = len(classes)

    def _block_pattern(self, b: int) -> int:
        return _decode(self.classes[b], self.offsets[b], self._lens[b])

    def rank(self, i: int) -> int:
        self._check_rank_arg(i)
        if i == 0:
            return 0
        b = (i - 1) // self.u
        s = b // self.SB_BLOCKS
        c = self._sb_rank[s]
        for j in range(s * self.SB_BLOCKS, b):
            c += self.classes[j]
        rem = i - b * self.u
        if rem:
            c += (self._block_pattern(b) & ((1 << rem) - 1)).bit_count()
        return c

    def access(self, i: int) -> int:
        if not 1 <= i <= self.m:
            raise ValueError("position out of range")
        b = (i - 1) // self.u
        return (self._block_pattern(b) >> ((i - 1) - b * self.u)) & 1

    def select(self, i: int) -> int:
        self._check_select_arg(i)
        s = self._sel_sample[(i - 1) // self.SELECT_SAMPLE]
        while self._sb_rank[s + 1] < i:
            s += 1
        c = self._sb_rank[s]
        b = s * self.SB_BLOCKS
        while c + self.classes[b] < i:
            c += self.classes[b]
            b += 1
        t = i - c
        pat = self._block_pattern(b)
        pos = 0
        while True:
            if (pat >> pos) & 1:
                t -= 1
                if t == 0:
                    return b * self.u + pos + 1
            pos += 1

    def select0(self, i: int) -> int:
        zeros = self.m - self.ones
        if not 1 <= i <= zeros:
            raise ValueError("select index out of range")
        lo, hi = 1, self.m
        while lo < hi:
            mid = (lo + hi) // 2
            if mid - self.rank(mid) >= i:
                hi = mid
            else:
                lo = mid + 1
        return lo

    def rank0(self, i: int) -> int:
        self._check_rank_arg(i)
        return i - self.rank(i)

    def payload_bits(self) -> BitCost:
        nblocks = len(self.classes)
        class_bits = nblocks * max(1, self.u.bit_length())
        rank_bits = len(self._sb_rank) * max(1, self.m.bit_length())
        nsb = max(1, len(self._sb_rank) - 1)
        sel_bits = len(self._sel_sample) * max(1, nsb.bit_length())
        return BitCost(self._payload, class_bits + rank_bits + sel_bits)


class IdVector(Bitvector):
    """ID back-end: stored one-positions (or zero-positions when complemented).

    select reads the position list directly; full rank is answered by binary
    search over those select values, the partial-rank query by membership.
    """

    kind = "id"

    __slots__ = ("m", "ones", "complemented", "_pos",
                 "entropy_block_size", "entropy_block_count")

    def __init__(self, m: int, ones: Iterable[int], complemented: bool = False):
        positions = sorted(set(ones))
        if positions and not (1 <= positions[0] and positions[-1] <= m):
            raise ValueError("one-position out of range")
        if complemented:
            present = set(positions)
            stored = [p for p in range(1, m + 1) if p not in present]
        else:
            stored = positions
        self._init_from_positions(m, tuple(stored), complemented)

    @classmethod
    def _from_positions(cls, m: int, stored: tuple[int, ...],
                        complemented: bool) -> "IdVector":
        self = cls.__new__(cls)
        self._init_from_positions(m, stored, complemented)
        return self

    def _init_from_positions(self, m, stored, complemented):
        if any(not 1 <= p <= m for p in stored):
            raise ValueError("position out of range")
        if list(stored) != sorted(set(stored)):
            raise ValueError("positions must be strictly increasing")
        self.m = m
        self._pos = tuple(stored)
        self.complemented = complemented
        self.ones = (m - len(stored)) if complemented else len(stored)
        self.entropy_block_size = m
        self.entropy_block_count = 1

    def rank(self, i: int) -> int:
        self._check_rank_arg(i)
        stored = bisect_right(self._pos, i)
        return (i - stored) if self.complemented else stored

    rank_via_select = rank

    def access(self, i: int) -> int:
        if not 1 <= i <= self.m:
            raise ValueError("position out of range")
        j = bisect_right(self._pos, i)
        member = j > 0 and self._pos[j - 1] == i
        return int(member != self.complemented)

    def prank(self, i: int) -> int:
        if not 1 <= i <= self.m:
            raise ValueError("position out of range")
        j = bisect_right(self._pos, i)
        member = j > 0 and self._pos[j - 1] == i
        if self.complemented:
            return -1 if member else i - j
        return j if member else -1

    def select(self, i: int) -> int:
        self._check_select_arg(i)
        if not self.complemented:
            return self._pos[i - 1]
        lo, hi = 1, self.m
        while lo < hi:
            mid = (lo + hi) // 2
            if self.rank(mid) >= i:
                hi = mid
            else:
                lo = mid + 1
        return lo

    def payload_bits(self) -> BitCost:
        payload = ceil_log2_comb(self.m, self.ones)
        width = max(1, (self.m + 1).bit_length())
        return BitCost(payload, len(self._pos) * width - payload)


class FixedBlockVector(Bitvector):
    """Fixed-size blocks, each held by an inner ID or RRR vector, with a
    precomputed table of ranks preceding every block."""

    kind = "fixedblock"

    __slots__ = ("m", "ones", "b", "codec", "children", "_R",
                 "entropy_block_size", "entropy_block_count")

    def __init__(self, m: int, ones: Iterable[int], b: int, codec: str = "id"):
        if b < 1:
            raise ValueError("block size must be positive")
        if codec not in ("id", "rrr"):
            raise ValueError("codec must be 'id' or 'rrr'")
        positions = sorted(set(ones))
        nblocks = max(1, (m + b - 1) // b) if m else 0
        per_block: list[list[int]] = [[] for _ in range(nblocks)]
        for p in positions:
            if not 1 <= p <= m:
                raise ValueError("one-position out of range")
            per_block[(p - 1) // b].append(p - ((p - 1) // b) * b)
        children = []
        for i in range(nblocks):
            blen = min(b, m - i * b)
            if codec == "id":
                children.append(IdVector(blen, per_block[i]))
            else:
                children.append(RrrVector(blen, per_block[i]))
        self._init_from_children(m, b, codec, tuple(children))

    @classmethod
    def _from_children(cls, m: int, b: int, codec: str,
                       children: tuple[Bitvector, ...]) -> "FixedBlockVector":
        self = cls.__new__(cls)
        self._init_from_children(m, b, codec, children)
        return self

    def _init_from_children(self, m, b, codec, children):
        self.m = m
        self.b = b
        self.codec = codec
        self.children = children
        self._R = [0]
        for child in children:
            self._R.append(self._R[-1] + child.ones)
        self.ones = self._R[-1]
        if codec == "id":
            self.entropy_block_size = b
            self.entropy_block_count = len(children)
        else:
            self.entropy_block_size = max((c.entropy_block_size for c in children),
                                          default=1)
            self.entropy_block_count = sum(c.entropy_block_count for c in children)

    def rank(self, i: int) -> int:
        self._check_rank_arg(i)
        if i == 0:
            return 0
        bi = (i - 1) // self.b
        return self._R[bi] + self.children[bi].rank(i - bi * self.b)

    def access(self, i: int) -> int:
        if not 1 <= i <= self.m:
            raise ValueError("position out of range")
        bi = (i - 1) // self.b
        return self.children[bi].access(i - bi * self.b)

    def select(self, i: int) -> int:
        self._check_select_arg(i)
        j = bisect_left(self._R, i) - 1
        return j * self.b + self.children[j].select(i - self._R[j])

    def payload_bits(self) -> BitCost:
        payload = 0
        overhead = 0
        for child in self.children:
            cost = child.payload_bits()
            payload += cost.payload
            overhead += cost.overhead
        overhead += len(self._R) * max(1, (self.m + 1).bit_length())
        return BitCost(payload, overhead)


BACKEND_TAGS = {"plain": 0, "rrr": 1, "id": 2, "fixedblock": 3}
_TAG_KINDS = {v: k for k, v in BACKEND_TAGS.items()}


def make_bitvector(kind: str, m: int, ones: Sequence[int], *,
                   u: int | None = None, b: int | None = None,
                   codec: str = "id", complemented: bool = False) -> Bitvector:
    """Uniform constructor used by the index builder."""
    if kind == "plain":
        return PlainBitvector(m, ones)
    if kind == "rrr":
        return RrrVector(m, ones, u)
    if kind == "id":
        return IdVector(m, ones, complemented)
    if kind == "fixedblock":
        if b is None:
            raise ValueError("fixedblock requires a block size")
        return FixedBlockVector(m, ones, b, codec)
    raise ValueError(f"unknown back-end {kind!r}")


# ---------------------------------------------------------------------------
# serialization: tag byte, m as u64, then length-prefixed sections
# ---------------------------------------------------------------------------

def _section(payload: bytes) -> bytes:
    return struct.pack("<Q", len(payload)) + payload


def _read_section(buf: bytes, off: int) -> tuple[bytes, int]:
    if off + 8 > len(buf):
        raise ValueError("truncated")
    (size,) = struct.unpack_from("<Q", buf, off)
    off += 8
    if off + size > len(buf):
        raise ValueError("truncated")
    return buf[off:off + size], off + size


def _pack_bitstream(values: Sequence[int], widths: Sequence[int]) -> bytes:
    acc = 0
    at = 0
    for v, w in zip(values, widths):
        acc |= v << at
        at += w
    return acc.to_bytes((at + 7) // 8, "little")


def _unpack_bitstream(data: bytes, widths: Sequence[int]) -> list[int]:
    acc = int.from_bytes(data, "little")
    out = []
    at = 0
    for w in widths:
        out.append((acc >> at) & ((1 << w) - 1))
        at += w
    if at > len(data) * 8:
        raise ValueError("truncated")
    return out


def serialize_bitvector(v: Bitvector) -> bytes:
    head = struct.pack("<BQ", BACKEND_TAGS[v.kind], v.m)
    if isinstance(v, PlainBitvector):
        raw = v._bits.to_bytes((v.m + 7) // 8, "little") if v.m else b""
        return head + _section(raw)
    if isinstance(v, RrrVector):
        widths = [ceil_log2_comb(blen, cls)
                  for blen, cls in zip(v._lens, v.classes)]
        return (head + _section(struct.pack("<Q", v.u))
                + _section(bytes(v.classes))
                + _section(_pack_bitstream(v.offsets, widths)))
    if isinstance(v, IdVector):
        pos = struct.pack(f"<{len(v._pos)}Q", *v._pos) if v._pos else b""
        return (head + _section(struct.pack("<Q", int(v.complemented)))
                + _section(pos))
    if isinstance(v, FixedBlockVector):
        kids = b"".join(_section(serialize_bitvector(c)) for c in v.children)
        return (head + _section(struct.pack("<QB", v.b,
                                            0 if v.codec == "id" else 1))
                + _section(kids))
    raise TypeError(f"cannot serialize {type(v).__name__}")


def deserialize_bitvector(buf: bytes, off: int = 0) -> tuple[Bitvector, int]:
    if off + 9 > len(buf):
        raise ValueError("truncated")
    tag, m = struct.unpack_from("<BQ", buf, off)
    off += 9
    kind = _TAG_KINDS.get(tag)
    if kind is None:
        raise ValueError(f"unknown back-end tag {tag}")
    if kind == "plain":
        raw, off = _read_section(buf, off)
        if len(raw) != (m + 7) // 8:
            raise ValueError("bad plain bitvector payload")
        bits = int.from_bytes(raw, "little")
        return PlainBitvector(m, [p + 1 for p in range(m) if (bits >> p) & 1]), off
    if kind == "rrr":
        sec, off = _read_section(buf, off)
        (u,) = struct.unpack("<Q", sec)
        csec, off = _read_section(buf, off)
        classes = list(csec)
        nblocks = max(1, (m + u - 1) // u) if m else 0
        if len(classes) != nblocks:
            raise ValueError("bad class section")
        lens = [min(u, m - b * u) for b in range(nblocks)]
        for blen, cls in zip(lens, classes):
            if cls > blen:
                raise ValueError("bad class section")
        widths = [ceil_log2_comb(blen, cls) for blen, cls in zip(lens, classes)]
        osec, off = _read_section(buf, off)
        offsets = _unpack_bitstream(osec, widths)
        return RrrVector._from_encoding(m, u, classes, offsets), off
    if kind == "id":
        sec, off = _read_section(buf, off)
        (flags,) = struct.unpack("<Q", sec)
        psec, off = _read_section(buf, off)
        if len(psec) % 8:
            raise ValueError("bad position section")
        pos = struct.unpack(f"<{len(psec) // 8}Q", psec)
        return IdVector._from_positions(m, tuple(pos), bool(flags & 1)), off
    # fixedblock
    sec, off = _read_section(buf, off)
    b, codec_code = struct.unpack("<QB", sec)
    kids_blob, off = _read_section(buf, off)
    children = []
    koff = 0
    nblocks = max(1, (m + b - 1) // b) if m else 0
    for _ in range(nblocks):
        blob, koff = _read_section(kids_blob, koff)
        child, used = deserialize_bitvector(blob, 0)
        if used != len(blob):
            raise ValueError("bad child encoding")
        children.append(child)
    if koff != len(kids_blob):
        raise ValueError("bad child encoding")
    codec = "id" if codec_code == 0 else "rrr"
    return FixedBlockVector._from_children(m, b, codec, tuple(children)), off
