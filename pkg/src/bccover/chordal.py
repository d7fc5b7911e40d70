"""Chordality recognition and clique trees via maximum cardinality search.

MCS labels vertices from position n down to 1, always taking an unlabeled
vertex with the largest number of labeled neighbors (ties broken by smallest
index, for determinism).  On a chordal graph the resulting ordering is a
perfect elimination ordering, and the same sweep can be extended to emit the
maximal cliques together with a tree on them whose every edge carries the
intersection of its endpoint cliques (the "middle set").

A disconnected chordal graph yields a clique *forest* with one tree per
component; ``CliqueTree`` holds forests as well.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import NotChordalError
from .graph import connected_components


@dataclass(frozen=True)
class Ordering:
    """A bijection between positions 1..n and vertices.

    ``order[i]`` is the vertex at position i+1; ``position[v]`` is the
    1-based position of vertex v.
    """

    order: tuple

    @property
    def n(self):
        return len(self.order)

    def position_map(self):
        return {v: i + 1 for i, v in enumerate(self.order)}

    def vertex_at(self, position):
        return self.order[position - 1]


@dataclass(frozen=True)
class CliqueTree:
    """Maximal cliques of a chordal graph arranged in a tree (or forest).

    ``nodes[i]`` is a maximal clique as a frozenset; ``edges`` are pairs of
    node indices with i < j; ``mids[k]`` is the intersection of the two
    endpoint cliques of ``edges[k]``.
    """

    nodes: tuple
    edges: tuple
    mids: tuple

    @property
    def node_count(self):
        return len(self.nodes)

    def mid_of(self, edge):
        i, j = (edge[0], edge[1]) if edge[0] < edge[1] else (edge[1], edge[0])
        return self.mids[self.edges.index((i, j))]

    def neighbors(self, i):
        out = []
        for a, b in self.edges:
            if a == i:
                out.append(b)
            elif b == i:
                out.append(a)
        return sorted(out)


def mcs_order(g):
    """Maximum cardinality search ordering of ``g``.

    Positions are filled from n down to 1; among vertices with equally many
    labeled neighbors the smallest index wins.
    """
    n = g.n
    weight = [0] * n
    labeled = [False] * n
    order = [0] * n
    for pos in range(n, 0, -1):
        best = -1
        for v in range(n):
            if not labeled[v] and (best < 0 or weight[v] > weight[best]):
                best = v
        labeled[best] = True
        order[pos - 1] = best
        for w in g.neighborhood(best):
            if not labeled[w]:
                weight[w] += 1
    return Ordering(tuple(order))


def is_perfect_elimination_order(g, ordering):
    """True iff, for every vertex, its later neighbors form a clique."""
    return _peo_failure(g, ordering) is None


def _peo_failure(g, ordering):
    """1-based position of the first simpliciality failure, or None."""
    if sorted(ordering.order) != list(range(g.n)):
        raise ValueError("ordering is not a bijection over the vertices")
    pos = ordering.position_map()
    for i, v in enumerate(ordering.order, start=1):
        later = [u for u in g.neighborhood(v) if pos[u] > i]
        for a in range(len(later)):
            for b in range(a + 1, len(later)):
                if not g.has_edge(later[a], later[b]):
                    return i
    return None


def is_chordal(g):
    return is_perfect_elimination_order(g, mcs_order(g))


def clique_tree(g):
    """Clique tree (or forest) of a chordal graph.

    Single MCS sweep: whenever the labeled-neighbor count fails to grow, the
    current clique is complete and a new one starts from the new vertex's
    labeled neighborhood; the new clique attaches to the clique of its
    most recently labeled member.  Raises :class:`NotChordalError` with the
    failing elimination position if ``g`` is not chordal.
    """
    ordering = mcs_order(g)
    failure = _peo_failure(g, ordering)
    if failure is not None:
        raise NotChordalError(
            "graph is not chordal (elimination check fails at position %d)"
            % failure,
            position=failure,
        )

    n = g.n
    labeled = set()
    alpha = {}
    clique_of = {}
    cliques = []
    tree_edges = []
    prev_card = 0
    cur = -1
    for pos in range(n, 0, -1):
        v = ordering.vertex_at(pos)
        alpha[v] = pos
        base = labeled & g.neighbor_set(v)
        new_card = len(base)
        if new_card <= prev_card:
            cur += 1
            cliques.append(set(base))
            if new_card != 0:
                u = min(base, key=lambda x: alpha[x])
                parent = clique_of[u]
                tree_edges.append((min(cur, parent), max(cur, parent)))
        clique_of[v] = cur
        cliques[cur].add(v)
        labeled.add(v)
        prev_card = new_card

    nodes = tuple(frozenset(k) for k in cliques)
    edges = tuple(sorted(tree_edges))
    mids = tuple(nodes[i] & nodes[j] for i, j in edges)
    return CliqueTree(nodes, edges, mids)


def verify_clique_tree(g, tree):
    """Check every clique-tree invariant of ``tree`` against ``g``.

    Validates the forest structure (one tree per component of ``g``), that
    nodes are exactly maximal cliques covering all edges, the middle sets,
    and the clique-intersection property along every path.
    """
    nodes = tree.nodes
    d = len(nodes)
    for i, j in tree.edges:
        if not (0 <= i < d and 0 <= j < d and i != j):
            return False

    # forest structure: acyclic, one tree per component of g
    parent = list(range(d))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in tree.edges:
        ri, rj = find(i), find(j)
        if ri == rj:
            return False  # cycle
        parent[ri] = rj
    tree_roots = {find(i) for i in range(d)}
    comps = connected_components(g)
    if len(tree_roots) != len(comps):
        return False
    comp_sets = {frozenset(c) for c in comps}
    by_root = {}
    for i in range(d):
        by_root.setdefault(find(i), set()).update(nodes[i])
    if {frozenset(s) for s in by_root.values()} != comp_sets:
        return False

    # nodes are maximal cliques, pairwise incomparable, covering all edges
    for k in nodes:
        for u in k:
            if not (0 <= u < g.n):
                return False
        members = sorted(k)
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                if not g.has_edge(members[a], members[b]):
                    return False
        for v in range(g.n):
            if v not in k and k <= g.neighbor_set(v):
                return False  # extendable, not maximal
    for a in range(d):
        for b in range(a + 1, d):
            if nodes[a] <= nodes[b] or nodes[b] <= nodes[a]:
                return False
    for u, v in g.edges():
        if not any(u in k and v in k for k in nodes):
            return False

    # middle sets and clique-intersection property
    for (i, j), mid in zip(tree.edges, tree.mids):
        if mid != nodes[i] & nodes[j]:
            return False
    adj = {i: tree.neighbors(i) for i in range(d)}
    for a in range(d):
        # BFS tree from a; check every pair (a, b) along recovered paths
        prev = {a: None}
        queue = deque([a])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in prev:
                    prev[y] = x
                    queue.append(y)
        for b in range(a + 1, d):
            if b not in prev:
                continue
            need = nodes[a] & nodes[b]
            x = b
            while x is not None:
                if not need <= nodes[x]:
                    return False
                x = prev[x]
    return True


def mis_membership_counts(g):
    """Per-vertex count of maximal independent sets of ``g`` containing it.

    Computed as the number of clique-tree nodes of the complement containing
    each vertex.  Returns ``(counts, all_le_two)`` where the flag says whether
    every vertex lies in at most two maximal independent sets.  Raises
    :class:`NotChordalError` when the complement is not chordal.
    """
    gc = g.complement()
    try:
        tree = clique_tree(gc)
    except NotChordalError as exc:
        raise NotChordalError(
            "complement is not chordal: %s" % exc, position=exc.position
        ) from exc
    counts = [0] * g.n
    for k in tree.nodes:
        for v in k:
            counts[v] += 1
    return tuple(counts), all(c <= 2 for c in counts)


def clique_tree_to_text(tree):
    """Serialize a clique tree: one ``K<i>:`` line per node, one ``T:`` line
    per tree edge with its middle set."""
    lines = []
    for i, k in enumerate(tree.nodes):
        lines.append("K%d: %s" % (i, " ".join(str(v) for v in sorted(k))))
    for (i, j), mid in zip(tree.edges, tree.mids):
        lines.append(
            "T: %d %d | mid: %s" % (i, j, " ".join(str(v) for v in sorted(mid)))
        )
    return "\n".join(lines) + "\n"
