import math
import random

import pytest

from xbwtrie import (FixedBlockVector, IdVector, PlainBitvector, RrrVector,
                     decode_block, encode_block, parse_bits)
from xbwtrie.succinct import (ceil_log2_comb, deserialize_bitvector,
                              serialize_bitvector)

B_B = "1010010"   # out-edge vector of the middle symbol in the figure index
B_A = "0000100"


def backends(m, ones, heavy=False):
    out = [
        PlainBitvector(m, ones),
        RrrVector(m, ones),
        IdVector(m, ones),
        IdVector(m, ones, complemented=heavy),
        FixedBlockVector(m, ones, b=5, codec="id"),
        FixedBlockVector(m, ones, b=8, codec="rrr"),
    ]
    return out


@pytest.fixture(params=range(6), ids=["plain", "rrr", "id", "id-comp",
                                      "fb-id", "fb-rrr"])
def backend(request):
    def make(bits01: str):
        return backends(*parse_bits(bits01), heavy=True)[request.param]
    return make


def test_rank_examples(backend):
    v = backend(B_B)
    assert v.rank(5) == 2
    assert v.rank(0) == 0
    assert v.rank(7) == 3


def test_rank_monotone_and_range(backend):
    v = backend(B_B)
    assert [v.rank(i) for i in range(8)] == [0, 1, 1, 2, 2, 2, 3, 3]
    with pytest.raises(ValueError, match="out of range"):
        v.rank(8)
    with pytest.raises(ValueError):
        v.rank(-1)


def test_select_examples(backend):
    assert backend(B_B).select(2) == 3
    assert backend("1000000").select(1) == 1
    assert backend(B_A).select(1) == 5
    with pytest.raises(ValueError):
        backend(B_B).select(4)
    with pytest.raises(ValueError):
        backend(B_B).select(0)


def test_rank_select_inverse(backend):
    v = backend(B_B)
    for i in range(1, v.ones + 1):
        assert v.rank(v.select(i)) == i


def test_prank(backend):
    v = backend(B_B)
    assert v.prank(3) == 2
    assert v.prank(2) == -1
    assert backend("1").prank(1) == 1
    with pytest.raises(ValueError):
        v.prank(0)


def test_rank_via_select():
    v = IdVector(*parse_bits(B_B))
    assert v.rank_via_select(5) == 2
    assert v.rank_via_select(0) == 0
    assert IdVector(*parse_bits(B_A)).rank_via_select(4) == 0


def test_access(backend):
    v = backend(B_B)
    assert [v.access(i) for i in range(1, 8)] == [1, 0, 1, 0, 0, 1, 0]


# --- block codec -----------------------------------------------------------

def test_codec_bijection_exhaustive():
    for u in range(1, 13):
        seen = {}
        for word in range(1 << u):
            cls, off = encode_block(word, u)
            assert cls == bin(word).count("1")
            assert 0 <= off < math.comb(u, cls)
            assert decode_block(cls, off, u) == word
            seen.setdefault(cls, set()).add(off)
        for cls, offs in seen.items():
            assert offs == set(range(math.comb(u, cls)))


def test_codec_offsets_are_lexicographic():
    u = 6
    for cls in range(u + 1):
        words = [w for w in range(1 << u) if bin(w).count("1") == cls]
        by_string = sorted(words, key=lambda w: tuple((w >> p) & 1
                                                      for p in range(u)))
        assert [encode_block(w, u)[1] for w in by_string] == \
            list(range(len(words)))


def test_codec_sampled_large_u():
    rng = random.Random(5)
    for u in range(13, 21):
        for _ in range(50):
            word = rng.getrandbits(u)
            cls, off = encode_block(word, u)
            assert decode_block(cls, off, u) == word


# --- payload accounting ----------------------------------------------------

def test_rrr_payload_example():
    v = RrrVector(*parse_bits("11000001"), u=4)
    assert v.payload_bits().payload == 3 + 2  # ceil(log C(4,2)) + ceil(log C(4,1))


def test_rrr_payload_all_zero():
    v = RrrVector(64, (), u=4)
    assert v.payload_bits().payload == 0


def test_rrr_payload_alternating():
    m = 64
    ones = tuple(range(1, m + 1, 2))
    v = RrrVector(m, ones, u=4)
    assert v.payload_bits().payload == (m // 4) * ceil_log2_comb(4, 2)


def test_rrr_per_block_bound():
    # ceil(log C(len, class)) <= len * H0(block) + 1 for every block.
    rng = random.Random(11)
    for _ in range(50):
        m = rng.randint(1, 300)
        ones = [p for p in range(1, m + 1) if rng.random() < rng.random()]
        v = RrrVector(m, ones)
        for blen, cls in zip(v._lens, v.classes):
            h0 = 0.0
            if 0 < cls < blen:
                h0 = (cls * math.log2(blen / cls)
                      + (blen - cls) * math.log2(blen / (blen - cls)))
            assert ceil_log2_comb(blen, cls) <= h0 + 1 + 1e-9


def test_id_payload_and_complement():
    m, ones = parse_bits("1110111")
    plainv = IdVector(m, ones)
    comp = IdVector(m, ones, complemented=True)
    assert plainv.payload_bits().payload == comp.payload_bits().payload
    assert comp.payload_bits().total < plainv.payload_bits().total
    assert len(comp._pos) == 1
    for i in range(0, m + 1):
        assert comp.rank(i) == plainv.rank(i)
    for i in range(1, m + 1):
        assert comp.prank(i) == plainv.prank(i)
    for i in range(1, plainv.ones + 1):
        assert comp.select(i) == plainv.select(i)


def test_payload_breakdown_sums():
    for v in backends(*parse_bits(B_B)):
        cost = v.payload_bits()
        assert cost.total == cost.payload + cost.overhead
        assert cost.payload >= 0 and cost.overhead >= 0


# --- cross-back-end equivalence -------------------------------------------

def test_backends_agree_on_random_vectors():
    rng = random.Random(99)
    for _ in range(120):
        m = rng.randint(1, 400)
        density = rng.choice([0.02, 0.1, 0.5, 0.9, 0.98])
        ones = tuple(p for p in range(1, m + 1) if rng.random() < density)
        ref = PlainBitvector(m, ones)
        others = [
            RrrVector(m, ones),
            IdVector(m, ones),
            IdVector(m, ones, complemented=True),
            FixedBlockVector(m, ones, b=rng.choice([1, 3, 17, 64, 500])),
            FixedBlockVector(m, ones, b=33, codec="rrr"),
        ]
        probes = sorted(rng.sample(range(m + 1), min(m + 1, 12)))
        for v in others:
            assert v.ones == ref.ones
            for i in probes:
                assert v.rank(i) == ref.rank(i), (v.kind, m, i)
                if i >= 1:
                    assert v.prank(i) == ref.prank(i)
            for j in range(1, ref.ones + 1):
                assert v.select(j) == ref.select(j)


def test_select0_and_rank0():
    rng = random.Random(3)
    for _ in range(40):
        m = rng.randint(1, 200)
        ones = tuple(p for p in range(1, m + 1) if rng.random() < 0.4)
        bits = ["0"] * m
        for p in ones:
            bits[p - 1] = "1"
        zeros = [i + 1 for i, b in enumerate(bits) if b == "0"]
        for v in (PlainBitvector(m, ones), RrrVector(m, ones)):
            for i in range(m + 1):
                assert v.rank0(i) == i - v.rank(i)
            for j, p in enumerate(zeros, start=1):
                assert v.select0(j) == p


# --- serialization ---------------------------------------------------------

def test_serialize_round_trip():
    rng = random.Random(21)
    for _ in range(40):
        m = rng.randint(1, 300)
        ones = tuple(p for p in range(1, m + 1) if rng.random() < 0.3)
        for v in backends(m, ones, heavy=True):
            blob = serialize_bitvector(v)
            back, used = deserialize_bitvector(blob)
            assert used == len(blob)
            assert serialize_bitvector(back) == blob
            assert back.kind == v.kind and back.m == v.m
            assert back.one_positions() == v.one_positions()
            for i in range(0, m + 1, max(1, m // 7)):
                assert back.rank(i) == v.rank(i)


def test_deserialize_errors():
    v = PlainBitvector(*parse_bits(B_B))
    blob = serialize_bitvector(v)
    with pytest.raises(ValueError, match="truncated"):
        deserialize_bitvector(blob[:5])
    with pytest.raises(ValueError, match="unknown back-end tag"):
        deserialize_bitvector(b"\xee" + blob[1:])


def test_serialized_framing():
    import struct
    m, ones = parse_bits(B_B)
    tags = {"plain": 0, "rrr": 1, "id": 2, "fixedblock": 3}
    for v in backends(m, ones):
        blob = serialize_bitvector(v)
        assert blob[0] == tags[v.kind]
        assert struct.unpack_from("<Q", blob, 1)[0] == m
    # plain packs bits LSB-first: 1010010 -> 0b0100101 = 0x25
    plain_blob = serialize_bitvector(PlainBitvector(m, ones))
    assert plain_blob == b"\x00" + struct.pack("<Q", 7) \
        + struct.pack("<Q", 1) + b"\x25"
