#!/usr/bin/env python3
"""
Partitions, covers, and the window between them
===============================================

A biclique partition covers every edge exactly once, so partitions are never
smaller than covers.  For co-chordal graphs the two are tied together:

    bp(G) <= mc(complement) - 1          (cut a clique tree edge by edge)
    bc(G) >= ceil(log2(bp(G) + 1))       (so bp(G) <= 2**bc(G) - 1)

Complete graphs sit exactly on both rails: bp(K_n) = n - 1 while
bc(K_n) = ceil(log2(n)).
"""

import random

from bccover import (
    bp_bc_window,
    ceil_log2,
    clique_tree,
    complete_graph,
    exact_bc,
    exact_bp,
    find_partition,
    gen_random_chordal,
    verify_partition,
)

print("complete graphs: partition number n-1, cover number ceil(log2 n)")
for n in range(2, 9):
    g = complete_graph(n)
    bc = exact_bc(g).value
    bp = exact_bp(g).value
    window = bp_bc_window(g, bc_value=bc, bp_value=bp)
    print("  K%d: bp=%d bc=%d  implied bc lower %d  bp upper %d"
          % (n, bp, bc, window.bc_lower_from_bp, window.bp_upper))
    assert bp == n - 1 and bc == ceil_log2(n)
    assert window.bc_lower_from_bp == bc  # tight for complete graphs

print("\nrandom co-chordal graphs: the constructive partition hits mc-1, "
      "the oracle sometimes does better")
rng = random.Random(7)
for _ in range(6):
    gc = gen_random_chordal(rng.randrange(5, 10), rng.random(),
                            rng.randrange(10**6))
    g = gc.complement()
    tree = clique_tree(gc)
    constructed = find_partition(tree)
    assert verify_partition(g, constructed)
    optimum = exact_bp(g).value
    print("  n=%d mc=%d: constructed partition %d, optimal partition %d"
          % (g.n, tree.node_count, len(constructed), optimum))
    assert optimum <= len(constructed) == tree.node_count - 1
