#!/usr/bin/env python3
"""Desk-scale smoke benchmark for the near-linear clique-tree paths.

Generates a chordal graph with n = 100,000 and roughly a million edges, then
builds its clique tree twice: once with integer count labels (bucket queue)
and once with list labels (partition refinement). The label test against the
previous label costs at most the degree of the chosen vertex, which is what
keeps both runs near-linear; the 10 s budget is the acceptance bar.

Usage: python scripts/bench_smoke.py [n] [mean-attach]
"""

import sys
import time

from chordalkit.cliquetree import fast_clique_tree
from chordalkit.oracle import GeneratorConfig, gen


def main() -> int:
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 100_000
    attach = float(sys.argv[2]) if len(sys.argv) > 2 else 16.0

    t0 = time.perf_counter()
    g = gen(GeneratorConfig(seed=42, n=n, param=attach, family="random-chordal"))
    print(f"generated: n={g.n} m={g.m} in {time.perf_counter() - t0:.2f}s")

    ok = True
    for token in ("mcs", "lexbfs"):
        t1 = time.perf_counter()
        tree = fast_clique_tree(g, token)
        dt = time.perf_counter() - t1
        status = "ok" if dt < 10.0 else "OVER BUDGET"
        ok &= dt < 10.0
        print(
            f"{token:7s}: {tree.size} cliques, {len(tree.separators)} distinct separators "
            f"in {dt:.2f}s [{status}]"
        )
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
