"""Shared test utilities: naive reference oracles and instance enumeration.

The naive computations here are deliberately brute force and share no code
with the package internals they certify.
"""

import random
from itertools import combinations

from bccover import Biclique, Graph, Tree


def er_graph(n, p, rng):
    """Erdos-Renyi style random graph from a seeded Random."""
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)


def random_tree_edges(n, rng):
    return [(rng.randrange(v), v) for v in range(1, n)]


def graph_from_labels(labels, edge_labels):
    """Graph from label pairs like ["ad", "ae"] over label string ``labels``."""
    index = {c: i for i, c in enumerate(labels)}
    return Graph(len(labels), [(index[a], index[b]) for a, b in edge_labels])


# -- naive biclique machinery --------------------------------------------------


def all_bicliques(g):
    """Every biclique subgraph of g, by assigning each vertex to L/R/out."""
    found = set()
    n = g.n

    def assign(v, left, right):
        if v == n:
            if left and right and g.is_biclique_subgraph(left, right):
                found.add(Biclique(frozenset(left), frozenset(right)))
            return
        assign(v + 1, left, right)
        assign(v + 1, left | {v}, right)
        assign(v + 1, left, right | {v})

    assign(0, frozenset(), frozenset())
    return sorted(found, key=lambda b: (sorted(b.canonical().left),
                                        sorted(b.canonical().right)))


def naive_maximal_bicliques(g):
    """Inclusion-maximal bicliques by double-subset scan over all bicliques."""
    candidates = all_bicliques(g)

    def contained(a, b):
        return (a.left <= b.left and a.right <= b.right) or (
            a.left <= b.right and a.right <= b.left
        )

    out = []
    for a in candidates:
        if not any(a != b and contained(a, b) for b in candidates):
            out.append(a)
    return out


def naive_bc(g):
    """Minimum biclique cover size by searching over all bicliques."""
    edges = set(g.edges())
    if not edges:
        return 0
    candidates = all_bicliques(g)
    edge_sets = [frozenset(b.edge_set()) for b in candidates]
    for k in range(1, len(edges) + 1):
        for combo in combinations(range(len(candidates)), k):
            union = set()
            for i in combo:
                union |= edge_sets[i]
            if union == edges:
                return k
    raise AssertionError("single edges always cover")


def set_partitions(items):
    """All set partitions of a list (Bell-number many)."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for partial in set_partitions(rest):
        for i in range(len(partial)):
            yield partial[:i] + [[first] + partial[i]] + partial[i + 1:]
        yield [[first]] + partial


def _is_biclique_edge_set(g, block):
    """Does ``block`` (a set of edges) equal L x R for some biclique of g?"""
    verts = sorted({v for e in block for v in e})
    adj = {v: set() for v in verts}
    for u, v in block:
        adj[u].add(v)
        adj[v].add(u)
    color = {verts[0]: 0}
    queue = [verts[0]]
    while queue:
        x = queue.pop()
        for y in adj[x]:
            if y not in color:
                color[y] = 1 - color[x]
                queue.append(y)
            elif color[y] == color[x]:
                return False
    if len(color) != len(verts):
        return False  # complete bipartite graphs are connected
    left = {v for v in verts if color[v] == 0}
    right = {v for v in verts if color[v] == 1}
    return len(block) == len(left) * len(right)


def naive_bp(g):
    """Minimum biclique partition size by scanning all edge-set partitions."""
    edges = g.edges()
    if not edges:
        return 0
    best = len(edges)
    for partition in set_partitions(edges):
        if len(partition) >= best:
            continue
        if all(_is_biclique_edge_set(g, set(block)) for block in partition):
            best = len(partition)
    return best


# -- naive edge-ranking validity ----------------------------------------------


def _tree_path(tree, start, goal):
    prev = {start: None}
    queue = [start]
    for x in queue:
        for y in tree.neighbors(x):
            if y not in prev:
                prev[y] = x
                queue.append(y)
    path = [goal]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    return path[::-1]


def naive_is_valid_ranking(tree, ranking):
    """Pairwise path check of the separation condition."""
    edges = tree.edges
    for i in range(len(edges)):
        for j in range(i + 1, len(edges)):
            e1, e2 = edges[i], edges[j]
            if ranking.ranks[e1] != ranking.ranks[e2]:
                continue
            # edges strictly between: path between the closest endpoints
            best = None
            for s in e1:
                for t in e2:
                    path = _tree_path(tree, s, t)
                    if best is None or len(path) < len(best):
                        best = path
            between = [
                (min(a, b), max(a, b)) for a, b in zip(best, best[1:])
            ]
            if not any(ranking.ranks[e] > ranking.ranks[e1] for e in between):
                return False
    return True


# -- non-isomorphic tree enumeration --------------------------------------------


def _tree_certificate(n, edges):
    adj = {v: [] for v in range(n)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    if n == 1:
        return "()"
    # centers by leaf stripping
    degree = {v: len(adj[v]) for v in range(n)}
    layer = [v for v in range(n) if degree[v] <= 1]
    remaining = n
    while remaining > 2:
        nxt = []
        for v in layer:
            remaining -= 1
            for u in adj[v]:
                degree[u] -= 1
                if degree[u] == 1:
                    nxt.append(u)
        layer = nxt

    def encode(node, parent):
        parts = sorted(
            encode(child, node) for child in adj[node] if child != parent
        )
        return "(" + "".join(parts) + ")"

    return min(encode(c, None) for c in layer)


def enumerate_trees(max_nodes):
    """All non-isomorphic trees with up to ``max_nodes`` nodes, as Tree
    objects keyed by node count.  Counts go 1, 1, 1, 2, 3, 6, 11, 23, 47."""
    by_size = {1: [()]}
    for n in range(2, max_nodes + 1):
        seen = {}
        for edges in by_size[n - 1]:
            for v in range(n - 1):
                candidate = edges + ((v, n - 1),)
                cert = _tree_certificate(n, candidate)
                if cert not in seen:
                    seen[cert] = candidate
        by_size[n] = list(seen.values())
    return {
        n: [Tree(n, list(edges)) for edges in trees]
        for n, trees in by_size.items()
    }


def random_cochordal(n, density, seed):
    """Random co-chordal graph (complement of a random chordal graph)."""
    from bccover import gen_random_chordal

    return gen_random_chordal(n, density, seed).complement()
