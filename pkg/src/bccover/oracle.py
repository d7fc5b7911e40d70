"""Brute-force oracles for desk-scale graphs.

Everything in this module prefers being obviously correct over being fast:
these are the reference computations that certify the constructive algorithms
and the bounds.  Each call takes an :class:`OracleBudget`; exceeding a vertex
or edge cap raises :class:`BudgetExceededError` before any work happens, while
running out of time mid-search returns the best proven window flagged inexact.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .chordal import clique_tree
from .cover import Biclique, find_partition
from .errors import BudgetExceededError, NotChordalError
from .ranking import (
    EdgeRanking,
    ceil_log2,
    edge_ranking_lower_bound,
    is_valid_edge_ranking,
)

@dataclass(frozen=True)
class OracleBudget:
    vertex_cap: int
    edge_cap: int
    time_cap: float

    def __post_init__(self):
        if self.vertex_cap <= 0 or self.edge_cap <= 0 or self.time_cap <= 0:
            raise ValueError("budget caps must be positive")


# bc/bp searches blow up fastest; value oracles (coloring, matching, clique
# number) cope with slightly larger graphs
DEFAULT_SEARCH_BUDGET = OracleBudget(vertex_cap=14, edge_cap=96, time_cap=10.0)
DEFAULT_VALUE_BUDGET = OracleBudget(vertex_cap=20, edge_cap=190, time_cap=10.0)
DEFAULT_RANKING_BUDGET = OracleBudget(vertex_cap=10, edge_cap=9, time_cap=10.0)


@dataclass
class OracleResult:
    """Lower/upper window with an optional certificate for the upper side."""

    lower: int
    upper: int
    certificate: object = None

    @property
    def exact(self):
        return self.lower == self.upper

    @property
    def value(self):
        if not self.exact:
            raise BudgetExceededError(
                "search was cut short; only the window [%d, %d] is known"
                % (self.lower, self.upper)
            )
        return self.upper


class _Timeout(Exception):
    pass


class _Deadline:
    def __init__(self, seconds):
        self.at = time.monotonic() + seconds
        self._tick = 0

    def check(self, every=256):
        self._tick += 1
        if self._tick % every == 0 and time.monotonic() > self.at:
            raise _Timeout()


def _check_caps(g, budget):
    if g.n > budget.vertex_cap:
        raise BudgetExceededError(
            "graph has %d vertices, cap is %d" % (g.n, budget.vertex_cap)
        )
    if g.m > budget.edge_cap:
        raise BudgetExceededError(
            "graph has %d edges, cap is %d" % (g.m, budget.edge_cap)
        )


# -- maximal cliques ----------------------------------------------------------


def enumerate_maximal_cliques(g, budget=None):
    """All maximal cliques, each as a sorted tuple, in lexicographic order.

    Bron-Kerbosch with pivoting.
    """
    budget = budget or DEFAULT_VALUE_BUDGET
    _check_caps(g, budget)
    deadline = _Deadline(budget.time_cap)
    if g.n == 0:
        return []
    out = []

    def expand(current, candidates, excluded):
        deadline.check(every=64)
        if not candidates and not excluded:
            out.append(tuple(sorted(current)))
            return
        pivot = max(candidates | excluded, key=lambda u: len(g.neighbor_set(u) & candidates))
        for v in sorted(candidates - g.neighbor_set(pivot)):
            expand(
                current | {v},
                candidates & g.neighbor_set(v),
                excluded & g.neighbor_set(v),
            )
            candidates = candidates - {v}
            excluded = excluded | {v}

    try:
        expand(frozenset(), frozenset(range(g.n)), frozenset())
    except _Timeout:
        raise BudgetExceededError("maximal clique enumeration timed out") from None
    return sorted(out)


def exact_clique_number(g, budget=None):
    """Clique number via full maximal-clique enumeration."""
    budget = budget or DEFAULT_VALUE_BUDGET
    if g.n == 0:
        return OracleResult(0, 0, ())
    cliques = enumerate_maximal_cliques(g, budget)
    best = max(cliques, key=len)
    return OracleResult(len(best), len(best), best)


# -- maximal bicliques --------------------------------------------------------


def enumerate_maximal_bicliques(g, budget=None):
    """All inclusion-maximal biclique subgraphs, canonically ordered.

    A pair (L, R) is maximal exactly when R is the common neighborhood of L
    and vice versa, so scanning all vertex subsets L and keeping the closed
    pairs enumerates every maximal biclique (twice; once per orientation).
    """
    budget = budget or DEFAULT_SEARCH_BUDGET
    _check_caps(g, budget)
    deadline = _Deadline(budget.time_cap)
    n = g.n
    nbr_mask = [0] * n
    for u in range(n):
        for v in g.neighborhood(u):
            nbr_mask[u] |= 1 << v
    full = (1 << n) - 1

    def common(mask):
        acc = full
        m = mask
        while m and acc:
            v = (m & -m).bit_length() - 1
            acc &= nbr_mask[v]
            m &= m - 1
        return acc if mask else 0

    found = []
    for mask in range(1, 1 << n):
        deadline.check(every=4096)
        right = common(mask)
        if right == 0:
            continue
        if common(right) != mask:
            continue
        if (mask & -mask) < (right & -right):  # keep one orientation only
            left_set = frozenset(i for i in range(n) if mask >> i & 1)
            right_set = frozenset(i for i in range(n) if right >> i & 1)
            found.append(Biclique(left_set, right_set).canonical())
    found.sort(key=lambda b: (sorted(b.left), sorted(b.right)))
    return found


# -- biclique cover number ----------------------------------------------------


def exact_bc(g, budget=None):
    """Minimum biclique cover, as a window with a certificate cover.

    Set-cover branch and bound over the maximal bicliques (any cover member
    can be fattened to a maximal one without uncovering anything), seeded
    with a greedy cover and pruned by the log-maximal-clique and conflict
    lower bounds.
    """
    budget = budget or DEFAULT_SEARCH_BUDGET
    _check_caps(g, budget)
    edges = g.edges()
    if not edges:
        return OracleResult(0, 0, [])
    bicliques = enumerate_maximal_bicliques(g, budget)
    sets = [frozenset(b.edge_set()) for b in bicliques]
    universe = frozenset(edges)

    # greedy upper bound
    uncovered = set(universe)
    greedy = []
    while uncovered:
        idx = max(range(len(sets)), key=lambda i: (len(sets[i] & uncovered), -i))
        greedy.append(idx)
        uncovered -= sets[idx]
    best = len(greedy)
    best_cover = list(greedy)

    lb = max(1, _bc_lower_bound(g))
    if best == lb:
        return OracleResult(best, best, [bicliques[i] for i in best_cover])

    covering = {e: [i for i, s in enumerate(sets) if e in s] for e in universe}
    deadline = _Deadline(budget.time_cap)

    def dfs(uncovered, chosen):
        nonlocal best, best_cover
        deadline.check()
        if not uncovered:
            if len(chosen) < best:
                best = len(chosen)
                best_cover = list(chosen)
            return
        if len(chosen) + 1 >= best:
            return
        e = min(uncovered, key=lambda e: len(covering[e]))
        options = sorted(
            covering[e], key=lambda i: -len(sets[i] & uncovered)
        )
        for idx in options:
            dfs(uncovered - sets[idx], chosen + [idx])
            if best == lb:
                return

    try:
        dfs(frozenset(universe), [])
    except _Timeout:
        return OracleResult(lb, best, [bicliques[i] for i in best_cover])
    return OracleResult(best, best, [bicliques[i] for i in best_cover])


def _bc_lower_bound(g):
    """Sound lower bounds cheap enough to use as pruning floor."""
    from . import bounds  # deferred; bounds builds on this module

    gc = g.complement()
    lb = ceil_log2(len(enumerate_maximal_cliques(gc)))
    if g.m <= 40:
        # the conflict graph has one vertex per edge of g
        conflict = bounds.conflict_graph(g, induced_c4_only=False)
        if conflict.m:
            conflict_budget = OracleBudget(41, 900, 2.0)
            try:
                lb = max(lb, exact_clique_number(conflict, conflict_budget).value)
            except BudgetExceededError:
                pass
    return lb


# -- biclique partition number ------------------------------------------------


def _eigen_partition_bound(g):
    """max(#positive, #negative adjacency eigenvalues): every biclique
    partition needs at least that many members."""
    if g.n == 0 or g.m == 0:
        return 0
    a = np.zeros((g.n, g.n))
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1.0
    eig = np.linalg.eigvalsh(a)
    tol = 1e-8 * g.n
    return int(max((eig > tol).sum(), (eig < -tol).sum()))


def exact_bp(g, budget=None):
    """Minimum biclique partition, as a window with a certificate partition.

    Branch and bound assigning each uncovered edge either to a grown copy of
    an open biclique (both orientations) or to a fresh one; growing a side
    silently claims every newly spanned cross edge, so the rectangles stay
    exactly-once by construction.
    """
    budget = budget or DEFAULT_SEARCH_BUDGET
    _check_caps(g, budget)
    edges = g.edges()
    if not edges:
        return OracleResult(0, 0, [])

    lb = max(1, _eigen_partition_bound(g))
    lb = max(lb, ceil_log2(len(enumerate_maximal_cliques(g.complement()))))

    # initial partitions: per-vertex stars, and the clique-tree construction
    # when the complement is chordal
    by_min = {}
    for u, v in edges:
        by_min.setdefault(u, set()).add(v)
    best_parts = [
        Biclique(frozenset([u]), frozenset(vs)) for u, vs in sorted(by_min.items())
    ]
    try:
        tree_parts = find_partition(clique_tree(g.complement()))
        if len(tree_parts) < len(best_parts):
            best_parts = tree_parts
    except NotChordalError:
        pass
    best = len(best_parts)
    if best == lb:
        return OracleResult(best, best, best_parts)

    edge_list = list(edges)
    deadline = _Deadline(budget.time_cap)

    def dfs(covered, members):
        nonlocal best, best_parts
        deadline.check()
        if len(members) >= best:
            return
        pending = None
        for e in edge_list:
            if e not in covered:
                pending = e
                break
        if pending is None:
            best = len(members)
            best_parts = [Biclique(frozenset(l), frozenset(r)) for l, r in members]
            return
        u, v = pending
        for k, (left, right) in enumerate(members):
            for a, b in ((u, v), (v, u)):
                if a in right or b in left:
                    continue
                new_left = left | {a}
                new_right = right | {b}
                fresh = {
                    (min(x, y), max(x, y))
                    for x in new_left
                    for y in new_right
                } - {
                    (min(x, y), max(x, y)) for x in left for y in right
                }
                if any(not g.has_edge(x, y) or (x, y) in covered for x, y in fresh):
                    continue
                members[k] = (new_left, new_right)
                dfs(covered | fresh, members)
                members[k] = (left, right)
                if best == lb:
                    return
        if len(members) + 1 < best:
            members.append((frozenset([u]), frozenset([v])))
            dfs(covered | {pending}, members)
            members.pop()

    try:
        dfs(frozenset(), [])
    except _Timeout:
        return OracleResult(lb, best, best_parts)
    return OracleResult(best, best, best_parts)


# -- chromatic number ---------------------------------------------------------


def exact_chromatic(g, budget=None):
    """Exact coloring via DSATUR-ordered backtracking."""
    budget = budget or DEFAULT_VALUE_BUDGET
    _check_caps(g, budget)
    n = g.n
    if n == 0:
        return OracleResult(0, 0, ())
    if g.m == 0:
        return OracleResult(1, 1, (1,) * n)

    # greedy largest-first upper bound
    order = sorted(range(n), key=lambda v: -g.degree(v))
    greedy = [0] * n
    for v in order:
        taken = {greedy[u] for u in g.neighborhood(v) if greedy[u]}
        c = 1
        while c in taken:
            c += 1
        greedy[v] = c
    best = max(greedy)
    best_assign = list(greedy)

    clique_lb = _greedy_clique_size(g)
    if best == clique_lb:
        return OracleResult(best, best, tuple(best_assign))

    colors = [0] * n
    deadline = _Deadline(budget.time_cap)

    def select():
        cand, sat, deg = -1, -1, -1
        for v in range(n):
            if colors[v]:
                continue
            s = len({colors[u] for u in g.neighborhood(v) if colors[u]})
            d = g.degree(v)
            if s > sat or (s == sat and d > deg):
                cand, sat, deg = v, s, d
        return cand

    def backtrack(used, colored):
        nonlocal best, best_assign
        deadline.check()
        if used >= best:
            return
        if colored == n:
            best = used
            best_assign = list(colors)
            return
        v = select()
        for c in range(1, min(used + 1, best - 1) + 1):
            if all(colors[u] != c for u in g.neighborhood(v)):
                colors[v] = c
                backtrack(max(used, c), colored + 1)
                colors[v] = 0
                if best == clique_lb:
                    return

    try:
        backtrack(0, 0)
    except _Timeout:
        return OracleResult(clique_lb, best, tuple(best_assign))
    return OracleResult(best, best, tuple(best_assign))


def _greedy_clique_size(g):
    best = 1 if g.n else 0
    for v in range(g.n):
        clique = {v}
        for u in sorted(g.neighborhood(v), key=lambda u: -g.degree(u)):
            if all(g.has_edge(u, w) for w in clique):
                clique.add(u)
        best = max(best, len(clique))
    return best


# -- maximum matching ---------------------------------------------------------


def exact_max_matching(g, budget=None):
    """Maximum matching size via include/exclude branching on edges."""
    budget = budget or DEFAULT_VALUE_BUDGET
    _check_caps(g, budget)
    edges = g.edges()
    m = len(edges)
    if m == 0:
        return OracleResult(0, 0, [])
    best = 0
    best_edges = []
    used = [False] * g.n
    chosen = []
    deadline = _Deadline(budget.time_cap)

    def dfs(idx, count):
        nonlocal best, best_edges
        deadline.check()
        free = sum(1 for x in used if not x)
        if count + free // 2 <= best:
            return
        while idx < m and (used[edges[idx][0]] or used[edges[idx][1]]):
            idx += 1
        if idx == m:
            if count > best:
                best = count
                best_edges = list(chosen)
            return
        u, v = edges[idx]
        used[u] = used[v] = True
        chosen.append((u, v))
        dfs(idx + 1, count + 1)
        chosen.pop()
        used[u] = used[v] = False
        dfs(idx + 1, count)

    try:
        dfs(0, 0)
    except _Timeout:
        return OracleResult(best, g.n // 2, best_edges)
    return OracleResult(best, best, best_edges)


# -- edge-ranking -------------------------------------------------------------


def exhaustive_edge_ranking(tree, budget=None):
    """Minimum rank count over all rank assignments, by direct search.

    Tries r = 1, 2, ... and backtracks over edges in order; a partial
    assignment is rejected as soon as two equal ranks have a fully assigned
    path with no larger rank between them.  Independent of the memoized
    optimal search, so it can certify it.
    """
    budget = budget or DEFAULT_RANKING_BUDGET
    m = len(tree.edges)
    if m > budget.edge_cap:
        raise BudgetExceededError(
            "tree has %d edges, exhaustive cap is %d" % (m, budget.edge_cap)
        )
    if m == 0:
        return 0
    deadline = _Deadline(budget.time_cap)

    between = {}
    index_of = {e: i for i, e in enumerate(tree.edges)}
    for i, j in combinations(range(m), 2):
        between[(i, j)] = _edges_between(tree, tree.edges[i], tree.edges[j], index_of)

    assignment = [0] * m

    def ok_so_far(idx):
        # sound pruning only: a pair whose path still has unassigned edges
        # cannot be rejected yet (a larger rank may land there later)
        rank = assignment[idx]
        for prev in range(idx):
            if assignment[prev] != rank:
                continue
            path = between[(prev, idx)]
            if all(assignment[k] for k in path) and not any(
                assignment[k] > rank for k in path
            ):
                return False
        return True

    def complete_assignment_valid():
        ranking = EdgeRanking(
            {e: assignment[i] for i, e in enumerate(tree.edges)}
        )
        return is_valid_edge_ranking(tree, ranking)

    def backtrack(idx, r):
        deadline.check()
        if idx == m:
            return complete_assignment_valid()
        for rank in range(1, r + 1):
            assignment[idx] = rank
            if ok_so_far(idx) and backtrack(idx + 1, r):
                return True
        assignment[idx] = 0
        return False

    try:
        for r in range(1, m + 1):
            for i in range(m):
                assignment[i] = 0
            if backtrack(0, r):
                assert r >= edge_ranking_lower_bound(tree)
                return r
    except _Timeout:
        raise BudgetExceededError("exhaustive edge-ranking timed out") from None
    return m


def _edges_between(tree, e1, e2, index_of):
    """Indices of the edges strictly between e1 and e2 (path between their
    closest endpoints)."""
    best = None
    for s in e1:
        paths = _bfs_paths(tree, s)
        for t in e2:
            path = paths[t]
            if best is None or len(path) < len(best):
                best = path
    out = []
    for a, b in zip(best, best[1:]):
        out.append(index_of[(min(a, b), max(a, b))])
    return out


def _bfs_paths(tree, start):
    prev = {start: None}
    queue = [start]
    for x in queue:
        for y in tree.neighbors(x):
            if y not in prev:
                prev[y] = x
                queue.append(y)
    paths = {}
    for t in prev:
        node, path = t, [t]
        while prev[node] is not None:
            node = prev[node]
            path.append(node)
        paths[t] = path[::-1]
    return paths
