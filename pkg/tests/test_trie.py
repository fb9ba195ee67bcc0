import pytest

from xbwtrie import (Alphabet, SymbolDistribution, build_from_strings,
                     colex_order, context, naive_count, preorder,
                     strings_from_bytes, symbol_distribution)

from conftest import FIG_COLEX, FIG_LABEL, FIG_PARENT, FIG_STRINGS


def test_build_single_node():
    t = build_from_strings([b""])
    assert t.n == 1
    assert t.alphabet.symbols == ()
    assert t.alphabet.sentinel == 0


def test_build_figure_trie():
    t = build_from_strings(FIG_STRINGS)
    assert t.n == 7
    assert t.parent == FIG_PARENT
    assert t.label == FIG_LABEL
    assert t.alphabet.symbols == (97, 98, 99)
    assert t.alphabet.sentinel == 0


def test_build_prefix_sharing():
    t = build_from_strings([b"ab", b"ac"])
    assert t.n == 4
    assert t.parent == (0, 0, 1, 1)


def test_build_empty_list_rejected():
    with pytest.raises(ValueError, match="no strings"):
        build_from_strings([])


def test_build_no_sentinel_available():
    strings = [bytes([b]) for b in range(256)]
    with pytest.raises(ValueError, match="no sentinel available"):
        build_from_strings(strings)


def test_sentinel_skips_used_low_bytes():
    t = build_from_strings([b"\x00\x01"])
    assert t.alphabet.sentinel == 2


def test_alphabet_invariants():
    with pytest.raises(ValueError):
        Alphabet((98, 97), 0)
    with pytest.raises(ValueError):
        Alphabet((97,), 97)


def test_preorder(fig_trie):
    assert preorder(build_from_strings([b""])) == [0]
    assert preorder(fig_trie) == list(range(7))
    assert preorder(build_from_strings([b"a", b"b"])) == [0, 1, 2]


def test_colex_order_figure(fig_trie):
    assert colex_order(fig_trie) == FIG_COLEX


def test_colex_order_trivial():
    assert colex_order(build_from_strings([b""])) == [0]
    assert colex_order(build_from_strings([b"a", b"b"])) == [0, 1, 2]


def test_colex_matches_reversed_path_sort(small_tries):
    for t in small_tries[:60]:
        paths = t.paths()
        expect = sorted(range(t.n), key=lambda v: tuple(reversed(paths[v])))
        assert colex_order(t) == expect
        assert colex_order(t)[0] == 0  # the root comes first


def test_context_basics(fig_trie):
    assert context(fig_trie, 3, 0) == b""
    assert context(fig_trie, 0, 3) == b"\x00\x00\x00"
    assert context(fig_trie, 4, 2) == b"cb"


def test_context_recurrence(small_tries):
    # The recurrence holds for the root too: its parent is itself and its
    # incoming label is the sentinel, which reproduces the padding rule.
    for t in small_tries[:40]:
        for v in range(t.n):
            for k in range(4):
                assert context(t, v, k + 1) == \
                    context(t, t.parent[v], k) + bytes([t.label[v]])


def test_naive_count_figure(fig_trie):
    assert naive_count(fig_trie, b"b") == 3
    assert naive_count(fig_trie, b"cb") == 1
    assert naive_count(fig_trie, b"") == 7
    assert naive_count(fig_trie, b"zz") == 0


def test_naive_count_rejects_sentinel(fig_trie):
    with pytest.raises(ValueError, match="pattern contains sentinel"):
        naive_count(fig_trie, b"\x00b")


def test_naive_count_longer_than_height(fig_trie):
    assert naive_count(fig_trie, b"bcbabb") == 0


def test_naive_count_child_consistency(small_tries):
    # Nodes matched by p+c are exactly the c-children of nodes matched by p.
    for t in small_tries[:25]:
        paths = t.paths()
        for p in (b"", paths[t.n - 1][-1:], paths[t.n // 2][-2:]):
            if t.alphabet.sentinel in p:
                continue
            matched = {v for v in range(t.n)
                       if len(paths[v]) >= len(p) and paths[v].endswith(p)}
            for c in t.alphabet.symbols:
                kids = {w for v in matched for lab, w in t.children[v]
                        if lab == c}
                assert naive_count(t, p + bytes([c])) == len(kids)


def test_symbol_distribution(fig_trie):
    assert symbol_distribution(fig_trie) == SymbolDistribution(7, (1, 3, 2))
    assert symbol_distribution(build_from_strings([b""])) == \
        SymbolDistribution(1, (0,))
    from conftest import complete_binary
    assert symbol_distribution(complete_binary(2)) == SymbolDistribution(7, (3, 3))


def test_distribution_invariants():
    with pytest.raises(ValueError):
        SymbolDistribution(3, (1, 2))  # sums to 3, not n - 1
    with pytest.raises(ValueError):
        SymbolDistribution(2, (-1, 2))
    with pytest.raises(ValueError):
        SymbolDistribution(1, ())


def test_strings_from_bytes():
    assert strings_from_bytes(b"") == []
    assert strings_from_bytes(b"\n") == [b""]
    assert strings_from_bytes(b"a\nbb\n") == [b"a", b"bb"]
    assert strings_from_bytes(b"a\nbb") == [b"a", b"bb"]
    assert strings_from_bytes(b"\n\n") == [b"", b""]
