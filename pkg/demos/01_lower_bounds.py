#!/usr/bin/env python3
"""
Lower bounds tour
=================

How do the classical lower bounds on the biclique cover number compare with
the log-maximal-clique bound?  We walk through the two instances where the
newer bound strictly wins, then sweep a batch of random graphs and count how
often each bound is the best one available.
"""

import random
from fractions import Fraction

from bccover import (
    Graph,
    complete_graph,
    cycle_graph,
    exact_bc,
    lb_log_chi,
    lb_log_mc,
    lb_matching,
    lb_omega_conflict,
)

# The complement of the 4-cycle is a perfect matching.  Its chromatic number
# is 2, so the chromatic route certifies only ceil(log2(2)) = 1 biclique.
# But the complement (the 4-cycle itself) has four maximal cliques, and
# ceil(log2(4)) = 2 is the true cover number.

c4c = cycle_graph(4).complement()
print("complement of C4:   log-chi bound %d, log-mc bound %d, exact bc %d"
      % (lb_log_chi(c4c)[0], lb_log_mc(c4c), exact_bc(c4c).value))

# On the complete graph K5 the two other published bounds collapse: the
# conflict graph has clique number 2, and the matching bound is 4/10 < 1.
# The log-mc bound is exact.

k5 = complete_graph(5)
print("K5:                 conflict bound %d, matching bound %s, "
      "log-mc bound %d, exact bc %d"
      % (lb_omega_conflict(k5), lb_matching(k5), lb_log_mc(k5),
         exact_bc(k5).value))
assert lb_matching(k5) == Fraction(2, 5)

# Sweep: on how many random graphs is each bound the strongest?

rng = random.Random(0)
wins = {"log_mc": 0, "log_chi": 0, "conflict": 0, "matching": 0}
tight = 0
trials = 150
for _ in range(trials):
    n = rng.randrange(3, 10)
    g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                  if rng.random() < 0.5])
    bounds = {
        "log_mc": lb_log_mc(g),
        "log_chi": lb_log_chi(g)[0],
        "conflict": lb_omega_conflict(g),
        "matching": -(-lb_matching(g).numerator // lb_matching(g).denominator)
        if g.m else 0,
    }
    best = max(bounds.values())
    for name, value in bounds.items():
        if value == best:
            wins[name] += 1
    if lb_log_mc(g) == exact_bc(g).value:
        tight += 1

print("\nover %d random graphs, times each bound was (tied-)best:" % trials)
for name, count in sorted(wins.items(), key=lambda t: -t[1]):
    print("  %-9s %d" % (name, count))
print("log-mc bound exactly equal to bc on %d/%d graphs" % (tight, trials))
