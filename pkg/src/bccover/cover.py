"""Constructing biclique partitions and covers of co-chordal graphs.

Everything here works off a clique tree of the complement.  Cutting a tree
edge e splits the cliques into two groups; the vertices on one side minus
mid(e), against the vertices on the other side minus mid(e), always form a
biclique of the original graph.  Recursing on both sides turns a clique tree
with d nodes into a biclique partition of size d - 1.  Driving the cuts by an
edge-ranking groups the partition into levels, and bicliques within one level
can often be merged into a single larger biclique, which is where covers
smaller than d - 1 come from.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field

from .chordal import CliqueTree, clique_tree
from .errors import NotChordalError
from .ranking import (
    EdgeRanking,
    Tree,
    heuristic_edge_ranking,
    is_valid_edge_ranking,
    optimal_edge_ranking,
)


@dataclass(frozen=True)
class Biclique:
    """An unordered pair of nonempty disjoint vertex sets."""

    left: frozenset
    right: frozenset

    def __post_init__(self):
        object.__setattr__(self, "left", frozenset(self.left))
        object.__setattr__(self, "right", frozenset(self.right))
        if not self.left or not self.right:
            raise ValueError("both sides of a biclique must be nonempty")
        if self.left & self.right:
            raise ValueError("biclique sides must be disjoint")

    def canonical(self):
        """Copy with the side containing the smallest vertex first."""
        if min(self.right) < min(self.left):
            return Biclique(self.right, self.left)
        return self

    def edge_set(self):
        """Edges of the biclique as normalized (u, v) pairs."""
        return {
            (min(u, v), max(u, v)) for u in self.left for v in self.right
        }

    def sides(self):
        return self.left, self.right

    def __eq__(self, other):
        if not isinstance(other, Biclique):
            return NotImplemented
        return {self.left, self.right} == {other.left, other.right}

    def __hash__(self):
        return hash(frozenset((self.left, self.right)))

    def __repr__(self):
        fmt = lambda s: "{%s}" % ",".join(str(v) for v in sorted(s))
        a, b = self.canonical().sides()
        return "Biclique(%s, %s)" % (fmt(a), fmt(b))


def clique_split_biclique(cliques, left_index, right_index):
    """Biclique induced by a bipartition of a maximal-clique list.

    ``cliques`` are the maximal cliques of the *complement* of the target
    graph; ``left_index``/``right_index`` must partition ``range(len(cliques))``
    into two nonempty groups.  Returns the biclique
    (union of left cliques minus union of right, and vice versa), or None if
    either difference is empty.
    """
    left_index = set(left_index)
    right_index = set(right_index)
    if not left_index or not right_index:
        raise ValueError("both index groups must be nonempty")
    if left_index & right_index or left_index | right_index != set(
        range(len(cliques))
    ):
        raise ValueError("index groups must partition the clique list")
    union_l = set().union(*(set(cliques[i]) for i in left_index))
    union_r = set().union(*(set(cliques[j]) for j in right_index))
    left = union_l - union_r
    right = union_r - union_l
    if not left or not right:
        return None
    return Biclique(frozenset(left), frozenset(right))


# -- working trees ------------------------------------------------------------


def join_clique_forest(tree):
    """Connect a clique forest into one tree with synthetic empty middle sets.

    Component representatives (lowest node index each) are chained in
    ascending order.  A connected tree is returned unchanged.
    """
    d = tree.node_count
    if d <= 1:
        return tree
    parent = list(range(d))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in tree.edges:
        parent[find(i)] = find(j)
    reps = {}
    for i in range(d):
        root = find(i)
        reps.setdefault(root, i)
    chain = sorted(reps.values())
    if len(chain) == 1:
        return tree
    extra = [(chain[k], chain[k + 1]) for k in range(len(chain) - 1)]
    edges = tuple(sorted(tree.edges + tuple(extra)))
    mids = tuple(tree.nodes[i] & tree.nodes[j] for i, j in edges)
    return CliqueTree(tree.nodes, edges, mids)


def max_weight_clique_tree(nodes):
    """Rebuild a clique tree over ``nodes`` as a maximum-weight spanning
    forest of the clique intersection graph.

    Any maximum-weight spanning tree of the intersection graph is a valid
    clique tree, so within each weight class we are free to pick edges that
    keep node degrees low; chained trees have much smaller edge-ranking
    numbers than stars, which is what the cover pipeline wants.
    """
    d = len(nodes)
    pairs = {}
    for i in range(d):
        for j in range(i + 1, d):
            w = len(nodes[i] & nodes[j])
            if w > 0:
                pairs.setdefault(w, []).append((i, j))
    parent = list(range(d))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    degree = [0] * d
    edges = []
    for w in sorted(pairs, reverse=True):
        pool = pairs[w]
        while True:
            best = None
            for i, j in pool:
                if find(i) == find(j):
                    continue
                key = (max(degree[i], degree[j]), degree[i] + degree[j], (i, j))
                if best is None or key < best[0]:
                    best = (key, i, j)
            if best is None:
                break
            _, i, j = best
            parent[find(i)] = find(j)
            degree[i] += 1
            degree[j] += 1
            edges.append((i, j))
    edges = tuple(sorted(edges))
    mids = tuple(nodes[i] & nodes[j] for i, j in edges)
    return CliqueTree(tuple(nodes), edges, mids)


def _node_adjacency(tree):
    adj = [[] for _ in range(tree.node_count)]
    for i, j in tree.edges:
        adj[i].append(j)
        adj[j].append(i)
    return [sorted(a) for a in adj]


def _tree_component(adj, inside, start, banned_edge):
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y in seen or y not in inside:
                continue
            if (min(x, y), max(x, y)) == banned_edge:
                continue
            seen.add(y)
            stack.append(y)
    return seen


def bfs_leaf_order(tree):
    """1-based BFS positions of the tree's nodes, starting from the
    lowest-index leaf, visiting neighbors in ascending order."""
    d = tree.node_count
    if d == 0:
        return {}
    adj = _node_adjacency(tree)
    leaves = [i for i in range(d) if len(adj[i]) <= 1]
    start = min(leaves) if leaves else 0
    order = {}
    queue = deque([start])
    order[start] = 1
    pos = 1
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in order:
                pos += 1
                order[y] = pos
                queue.append(y)
    return order


def _cut_biclique(tree, adj, node_set, edge, mid):
    side = _tree_component(adj, node_set, edge[0], edge)
    other = node_set - side
    union_s = set().union(*(tree.nodes[i] for i in side))
    union_o = set().union(*(tree.nodes[i] for i in other))
    left = frozenset(union_s - mid)
    right = frozenset(union_o - mid)
    return Biclique(left, right), side, other


def find_partition(tree, policy="balanced"):
    """Biclique partition of G from a clique tree of its complement.

    Cuts one tree edge, emits the biclique across the cut, and recurses on
    both sides; the result always has (node count - 1) members.  ``policy``
    picks the cut edge: "balanced" minimizes the larger side (ties going to
    the lexicographically smallest edge), "first" takes the smallest edge
    outright.  A forest input is first joined into one tree.
    """
    if policy not in ("balanced", "first"):
        raise ValueError("unknown edge policy %r" % policy)
    work = join_clique_forest(tree)
    adj = _node_adjacency(work)
    mid_of = dict(zip(work.edges, work.mids))
    out = []

    def recurse(node_set):
        if len(node_set) <= 1:
            return
        inner = [
            e for e in work.edges if e[0] in node_set and e[1] in node_set
        ]
        if policy == "first":
            edge = inner[0]
        else:
            total = len(node_set)
            best = None
            for e in inner:
                side = _tree_component(adj, node_set, e[0], e)
                larger = max(len(side), total - len(side))
                if best is None or (larger, e) < best[0]:
                    best = ((larger, e), e)
            edge = best[1]
        biclique, side, other = _cut_biclique(
            work, adj, node_set, edge, mid_of[edge]
        )
        out.append(biclique)
        recurse(side)
        recurse(other)

    recurse(frozenset(range(work.node_count)))
    return out


def find_biclique_levels(tree, ranking, order, r):
    """Partition bicliques grouped by ranking level.

    Cuts are made top rank first; a cut at rank k lands in level r + 1 - k,
    annotated with the smallest BFS position (per ``order``) of any node in
    the subtree being cut.  The flattened result is a biclique partition.
    Returns ``{level: [(biclique, ord), ...]}`` in emission order.
    """
    work = join_clique_forest(tree)
    d = work.node_count
    if d <= 1:
        return {}
    if not is_valid_edge_ranking(Tree(d, work.edges), ranking):
        raise ValueError("not a valid edge-ranking of the clique tree")
    adj = _node_adjacency(work)
    mid_of = dict(zip(work.edges, work.mids))
    levels = {}

    def recurse(node_set):
        if len(node_set) <= 1:
            return
        inner = [
            e for e in work.edges if e[0] in node_set and e[1] in node_set
        ]
        edge = sorted(inner, key=lambda e: (-ranking.ranks[e], e))[0]
        level = r + 1 - ranking.ranks[edge]
        ord_val = min(order[i] for i in node_set)
        biclique, side, other = _cut_biclique(
            work, adj, node_set, edge, mid_of[edge]
        )
        levels.setdefault(level, []).append((biclique, ord_val))
        recurse(side)
        recurse(other)

    recurse(frozenset(range(d)))
    for level, items in levels.items():
        assert 1 <= level <= r
        ords = [o for _, o in items]
        assert len(set(ords)) == len(ords)
    return levels


def merge_bicliques(items, g):
    """Greedy left-to-right merge of one level's bicliques.

    ``items`` is a list of ``(biclique, ord)`` pairs, every biclique already a
    biclique subgraph of ``g``.  Sorted by ``ord``, each incoming biclique is
    unioned into any already-kept member for which one of the two side
    orientations stays a biclique of ``g``; if no merge succeeds it is kept
    as a new member.
    """
    for b, _ in items:
        if not g.is_biclique_subgraph(b.left, b.right):
            raise ValueError("%r is not a biclique subgraph of the host" % (b,))
    kept = []
    for b, _ in sorted(items, key=lambda t: t[1]):
        append = True
        for entry in kept:
            cand_l, cand_r = b.left | entry[0], b.right | entry[1]
            if g.is_biclique_subgraph(cand_l, cand_r):
                entry[0], entry[1] = cand_l, cand_r
                append = False
                continue
            cand_l, cand_r = b.right | entry[0], b.left | entry[1]
            if g.is_biclique_subgraph(cand_l, cand_r):
                entry[0], entry[1] = cand_l, cand_r
                append = False
        if append:
            kept.append([set(b.left), set(b.right)])
    return [Biclique(frozenset(l), frozenset(r)) for l, r in kept]


@dataclass
class CoverMetadata:
    """What the cover pipeline did and saw along the way."""

    mc_complement: int
    ranking_r: int
    ranking_optimal: bool
    all_le_two: bool
    membership_counts: tuple
    level_sizes_before: dict = field(default_factory=dict)
    level_sizes_after: dict = field(default_factory=dict)
    tree: CliqueTree | None = None


def cover_cochordal(g, ranking_mode="auto", max_exact_edges=64,
                    rebuild_tree=True):
    """Biclique cover of a co-chordal graph; size is at most mc(complement)-1.

    Pipeline: clique tree of the complement, optionally rebuilt as a
    low-degree maximum-weight spanning tree (star-shaped trees coming out of
    the MCS sweep would inflate the ranking for no reason); an edge-ranking of
    that tree (exact below ``max_exact_edges`` edges in "auto" mode, forced by
    "exact"/"heuristic"); level decomposition; greedy merge per level.

    Returns ``(cover, CoverMetadata)``.  Raises :class:`NotChordalError` when
    the complement is not chordal.
    """
    if ranking_mode not in ("auto", "exact", "heuristic"):
        raise ValueError("unknown ranking mode %r" % ranking_mode)
    gc = g.complement()
    try:
        base = clique_tree(gc)
    except NotChordalError as exc:
        raise NotChordalError(
            "complement is not chordal: %s" % exc, position=exc.position
        ) from exc

    counts = [0] * g.n
    for k in base.nodes:
        for v in k:
            counts[v] += 1
    all_le_two = all(c <= 2 for c in counts)

    tree = max_weight_clique_tree(base.nodes) if rebuild_tree else base
    work = join_clique_forest(tree)
    d = work.node_count
    meta = CoverMetadata(
        mc_complement=d,
        ranking_r=0,
        ranking_optimal=True,
        all_le_two=all_le_two,
        membership_counts=tuple(counts),
        tree=work,
    )
    if d <= 1:
        return [], meta

    rank_tree = Tree(d, work.edges)
    if ranking_mode == "heuristic":
        ranking, r = heuristic_edge_ranking(rank_tree)
        optimal = False
    elif ranking_mode == "exact":
        ranking, r = optimal_edge_ranking(rank_tree, max_edges=len(work.edges))
        optimal = True
    elif len(work.edges) <= max_exact_edges:
        ranking, r = optimal_edge_ranking(rank_tree, max_edges=max_exact_edges)
        optimal = True
    else:
        ranking, r = heuristic_edge_ranking(rank_tree)
        optimal = False

    order = bfs_leaf_order(work)
    levels = find_biclique_levels(work, ranking, order, r)
    cover = []
    for level in range(1, r + 1):
        items = levels.get(level, [])
        merged = merge_bicliques(items, g)
        meta.level_sizes_before[level] = len(items)
        meta.level_sizes_after[level] = len(merged)
        cover.extend(merged)

    meta.ranking_r = r
    meta.ranking_optimal = optimal
    assert len(cover) <= d - 1
    assert verify_cover(g, cover)
    return cover, meta


# -- verification -------------------------------------------------------------


def _edge_multiplicities(g, bicliques):
    counts = Counter()
    for b in bicliques:
        if not g.is_biclique_subgraph(b.left, b.right):
            return None
        counts.update(b.edge_set())
    return counts


def verify_cover(g, bicliques):
    """True iff every member is a biclique of ``g`` and every edge of ``g``
    is covered at least once."""
    counts = _edge_multiplicities(g, bicliques)
    if counts is None:
        return False
    return set(counts) == set(g.edges())


def verify_partition(g, bicliques):
    """True iff every member is a biclique of ``g`` and every edge of ``g``
    is covered exactly once."""
    counts = _edge_multiplicities(g, bicliques)
    if counts is None:
        return False
    return set(counts) == set(g.edges()) and all(
        c == 1 for c in counts.values()
    )


def cover_defects(g, bicliques, partition=False):
    """Human-readable list of violations (empty when valid)."""
    problems = []
    for idx, b in enumerate(bicliques):
        if not g.is_biclique_subgraph(b.left, b.right):
            problems.append("member %d is not a biclique subgraph" % idx)
    if problems:
        return problems
    counts = _edge_multiplicities(g, bicliques)
    for e in g.edges():
        if counts[e] == 0:
            problems.append("edge %d %d is uncovered" % e)
            break
    if partition:
        for e in sorted(counts):
            if counts[e] > 1:
                problems.append(
                    "edge %d %d is covered %d times" % (e[0], e[1], counts[e])
                )
                break
    return problems


# -- serialization ------------------------------------------------------------


def bicliques_to_text(bicliques):
    lines = []
    for b in bicliques:
        a, c = b.canonical().sides()
        lines.append(
            "L: %s | R: %s"
            % (
                " ".join(str(v) for v in sorted(a)),
                " ".join(str(v) for v in sorted(c)),
            )
        )
    return "\n".join(lines) + ("\n" if lines else "")


def bicliques_from_text(text):
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        try:
            left_part, right_part = line.split("|")
            left = [int(x) for x in left_part.split(":", 1)[1].split()]
            right = [int(x) for x in right_part.split(":", 1)[1].split()]
            out.append(Biclique(frozenset(left), frozenset(right)))
        except (ValueError, IndexError):
            raise ValueError(
                "line %d: expected 'L: ... | R: ...'" % lineno
            ) from None
    return out
