"""
Trie entropies and the bounds that hold between them
====================================================

Three quantities attach to a trie: the worst-case entropy (log of how many
tries share its symbol distribution), the empirical entropies H_k that
condition each node's out-labels on its k-symbol incoming context, and the
number r of runs in the co-lex out-label sequence.  The report checks the
inequalities tying them together: the H^wc / n*H_0 sandwich, monotonicity
of H_k in k, the run bound r <= n H_k + sigma^(k+1), and the block-payload
bound for the entropy-coded bitvectors.
"""
import random

from xbwtrie import build_from_strings, check_bounds, random_trie
from xbwtrie.entropy import report_rows

rng = random.Random(7)
samples = {
    "shallow words": build_from_strings([b"ab", b"ac", b"ba", b"bc", b"ca"]),
    "unary path": build_from_strings([b"a" * 40]),
    "random trie": random_trie(rng, 150, 6),
}

for name, trie in samples.items():
    report = check_bounds(trie, max_order=3, modes=("fid",))
    print(f"--- {name}: n={report.n}, sigma={report.sigma} ---")
    print(f"  H^wc = {report.hwc:8.3f} bits")
    for k, h in enumerate(report.h):
        print(f"  n*H_{k} = {report.n * h:7.3f} bits over "
              f"{report.context_counts[k]} contexts")
    print(f"  r = {report.r} runs {report.r_by_symbol}")
    worst = min(report.checks, key=lambda c: c.slack)
    print(f"  checks: {sum(c.passed for c in report.checks)}/"
          f"{len(report.checks)} pass; tightest is {worst.name} "
          f"with {worst.slack:.3f} bits of slack")
    assert report.passed

# The machine-readable rows the CLI emits for the same report:
print("\nsample rows for the last trie:")
for row in report_rows(report)[:6]:
    print("  " + "\t".join(row))
