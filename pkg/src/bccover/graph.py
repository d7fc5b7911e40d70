"""Undirected simple graphs over dense integer vertices.

Vertices are always 0..n-1.  Graphs are immutable after construction, so they
can be shared freely between threads; every operation here is pure.  Neighbor
sets are kept sorted so that all derived objects (edge lists, complements,
induced subgraphs) come out in a deterministic order.

The on-disk edge-list format is one header line ``p <n> <m>`` followed by one
``u v`` line per edge; lines starting with ``c`` are comments.  Files written
by :func:`graph_to_text` are canonical (header, then edges in lexicographic
order) and round-trip bit-exactly.
"""

from __future__ import annotations

from .errors import GraphFormatError


class Graph:
    """Immutable undirected simple graph on vertices 0..n-1."""

    __slots__ = ("n", "_nbrs", "_nbr_sets", "_edges")

    def __init__(self, n, edges=()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        adj = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError("edge (%r, %r) out of range for n=%d" % (u, v, n))
            if u == v:
                raise ValueError("self-loop at vertex %d" % u)
            adj[u].add(v)
            adj[v].add(u)
        self._nbrs = tuple(tuple(sorted(s)) for s in adj)
        self._nbr_sets = tuple(frozenset(s) for s in adj)
        self._edges = tuple(
            (u, v) for u in range(n) for v in self._nbrs[u] if u < v
        )

    # -- accessors ---------------------------------------------------------

    @property
    def m(self):
        """Number of edges."""
        return len(self._edges)

    def edges(self):
        """All edges as (u, v) pairs with u < v, in lexicographic order."""
        return list(self._edges)

    def degree(self, v):
        self._check_vertex(v)
        return len(self._nbrs[v])

    def neighborhood(self, v):
        """Sorted tuple of neighbors of v."""
        self._check_vertex(v)
        return self._nbrs[v]

    def neighbor_set(self, v):
        """Neighbors of v as a frozenset (no bounds check beyond indexing)."""
        return self._nbr_sets[v]

    def has_edge(self, u, v):
        return 0 <= u < self.n and v in self._nbr_sets[u]

    def _check_vertex(self, v):
        if not (0 <= v < self.n):
            raise ValueError("vertex %r out of range for n=%d" % (v, self.n))

    # -- derived graphs ----------------------------------------------------

    def complement(self):
        """Graph with edge (u, v) iff u != v and (u, v) is not an edge here."""
        edges = [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if v not in self._nbr_sets[u]
        ]
        return Graph(self.n, edges)

    def induced_subgraph(self, vertices):
        """Subgraph induced by ``vertices``, relabeled to 0..|S|-1.

        Returns ``(graph, mapping)`` where ``mapping[i]`` is the original
        index of the new vertex ``i``.
        """
        mapping = tuple(sorted(set(vertices)))
        for v in mapping:
            self._check_vertex(v)
        index = {v: i for i, v in enumerate(mapping)}
        edges = [
            (index[u], index[v])
            for u, v in self._edges
            if u in index and v in index
        ]
        return Graph(len(mapping), edges), mapping

    def is_biclique_subgraph(self, left, right):
        """True iff ``left``/``right`` are nonempty, disjoint, in range, and
        every cross pair is an edge."""
        left = set(left)
        right = set(right)
        if not left or not right or left & right:
            return False
        for v in left | right:
            if not (0 <= v < self.n):
                return False
        return all(v in self._nbr_sets[u] for u in left for v in right)

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __hash__(self):
        return hash((self.n, self._edges))

    def __repr__(self):
        return "Graph(n=%d, m=%d)" % (self.n, self.m)


def complete_graph(n):
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def connected_components(g):
    """List of components, each a sorted tuple of vertices."""
    seen = [False] * g.n
    comps = []
    for start in range(g.n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.neighborhood(v):
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(tuple(sorted(comp)))
    return comps


# -- edge-list text format ---------------------------------------------------


def graph_to_text(g):
    lines = ["p %d %d" % (g.n, g.m)]
    lines.extend("%d %d" % e for e in g.edges())
    return "\n".join(lines) + "\n"


def graph_from_text(text):
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if line.startswith("p"):
            if n is not None:
                raise GraphFormatError("duplicate header", lineno)
            if len(parts) != 3:
                raise GraphFormatError("header must be 'p <n> <m>'", lineno)
            try:
                n, m = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError("non-integer header field", lineno) from None
            if n < 0 or m < 0:
                raise GraphFormatError("negative header field", lineno)
            continue
        if n is None:
            raise GraphFormatError("edge before 'p' header", lineno)
        if len(parts) != 2:
            raise GraphFormatError("edge line must be 'u v'", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError("non-integer vertex", lineno) from None
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise GraphFormatError("invalid edge %d %d" % (u, v), lineno)
        edges.append((u, v))
    if n is None:
        raise GraphFormatError("missing 'p <n> <m>' header")
    g = Graph(n, edges)
    if g.m != m:
        raise GraphFormatError(
            "header claims %d edges, file has %d distinct edges" % (m, g.m)
        )
    return g


def read_graph(path):
    with open(path, "r", encoding="utf-8") as fh:
        return graph_from_text(fh.read())


def write_graph(g, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(graph_to_text(g))
