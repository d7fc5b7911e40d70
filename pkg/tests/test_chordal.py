import random
from itertools import permutations

import networkx as nx
import pytest

from bccover import (
    CliqueTree,
    NotChordalError,
    Ordering,
    clique_tree,
    clique_tree_to_text,
    complete_graph,
    cycle_graph,
    gen_fig_graph,
    gen_random_chordal,
    is_chordal,
    is_perfect_elimination_order,
    mcs_order,
    mis_membership_counts,
    path_graph,
    verify_clique_tree,
)
from bccover.graph import Graph


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_mcs_order_is_bijection():
    order = mcs_order(path_graph(5))
    assert sorted(order.order) == list(range(5))
    assert is_perfect_elimination_order(path_graph(5), order)


def test_mcs_on_complete_graph_any_order_is_peo():
    k3 = complete_graph(3)
    assert is_perfect_elimination_order(k3, mcs_order(k3))
    for perm in permutations(range(3)):
        assert is_perfect_elimination_order(k3, Ordering(perm))


def test_c4_has_no_peo_at_all():
    c4 = cycle_graph(4)
    for perm in permutations(range(4)):
        assert not is_perfect_elimination_order(c4, Ordering(perm))
    assert not is_perfect_elimination_order(c4, mcs_order(c4))


def test_fig3_complement_alphabetical_order_is_peo():
    g = gen_fig_graph("fig3").graph.complement()
    assert is_perfect_elimination_order(g, Ordering(tuple(range(6))))


def test_peo_rejects_malformed_ordering():
    with pytest.raises(ValueError):
        is_perfect_elimination_order(path_graph(3), Ordering((0, 0, 2)))


def test_is_chordal_basics():
    assert not is_chordal(cycle_graph(4))
    assert not is_chordal(cycle_graph(5))
    for n in (1, 2, 5, 9):
        assert is_chordal(path_graph(n))
    assert is_chordal(Graph(0))
    assert is_chordal(Graph(4))  # edgeless


def test_is_chordal_matches_networkx_on_random_graphs():
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randrange(2, 10)
        g = Graph(
            n,
            [
                (u, v)
                for u in range(n)
                for v in range(u + 1, n)
                if rng.random() < 0.45
            ],
        )
        assert is_chordal(g) == nx.is_chordal(to_nx(g))


def test_random_chordal_generator_outputs_are_chordal():
    for seed in range(200):
        g = gen_random_chordal(2 + seed % 11, (seed % 5) / 4, seed)
        assert is_chordal(g)


def test_clique_tree_examples():
    t = clique_tree(path_graph(5))
    assert sorted(sorted(k) for k in t.nodes) == [[0, 1], [1, 2], [2, 3], [3, 4]]
    degrees = [sum(1 for e in t.edges if i in e) for i in range(4)]
    assert sorted(degrees) == [1, 1, 2, 2]  # a path of cliques

    t = clique_tree(complete_graph(6))
    assert t.node_count == 1 and t.edges == ()

    g3c = gen_fig_graph("fig3").graph.complement()
    t = clique_tree(g3c)
    assert [sorted(k) for k in t.nodes] == [
        [0, 1, 2], [1, 2, 3], [2, 3, 4], [3, 4, 5],
    ]
    assert t.edges == ((0, 1), (1, 2), (2, 3))
    assert [sorted(m) for m in t.mids] == [[1, 2], [2, 3], [3, 4]]


def test_clique_tree_rejects_non_chordal_with_certificate():
    with pytest.raises(NotChordalError) as err:
        clique_tree(cycle_graph(4))
    assert err.value.position is not None
    assert 1 <= err.value.position <= 4


def test_clique_tree_on_disconnected_graph_is_forest():
    g = Graph(5, [(0, 1), (2, 3)])  # plus isolated vertex 4
    t = clique_tree(g)
    assert t.node_count == 3
    assert len(t.edges) == 0
    assert verify_clique_tree(g, t)


def test_clique_tree_node_sets_match_networkx_cliques():
    rng = random.Random(23)
    for seed in range(60):
        g = gen_random_chordal(rng.randrange(2, 13), rng.random(), seed)
        t = clique_tree(g)
        ours = sorted(sorted(k) for k in t.nodes)
        theirs = sorted(sorted(c) for c in nx.find_cliques(to_nx(g)))
        assert ours == theirs
        assert t.node_count <= g.n


def test_verify_clique_tree_property():
    rng = random.Random(7)
    for seed in range(200):
        g = gen_random_chordal(rng.randrange(1, 14), rng.random(), seed + 1000)
        assert verify_clique_tree(g, clique_tree(g))


def test_verify_rejects_star_rewiring_of_fig3_tree():
    g3c = gen_fig_graph("fig3").graph.complement()
    t = clique_tree(g3c)
    hub = 3  # {d,e,f}
    edges = tuple(sorted((min(i, hub), max(i, hub)) for i in range(3)))
    star = CliqueTree(
        t.nodes, edges, tuple(t.nodes[i] & t.nodes[j] for i, j in edges)
    )
    assert not verify_clique_tree(g3c, star)


def test_verify_rejects_single_node_tree_for_wrong_graph():
    assert verify_clique_tree(complete_graph(3), clique_tree(complete_graph(3)))
    bad = CliqueTree((frozenset({0, 1}),), (), ())
    assert not verify_clique_tree(complete_graph(3), bad)


def test_counting_identity_mids_plus_n_equals_clique_sizes():
    for seed in range(80):
        g = gen_random_chordal(2 + seed % 12, (seed % 4) / 3, seed)
        t = clique_tree(g)
        assert sum(len(m) for m in t.mids) + g.n == sum(len(k) for k in t.nodes)


def test_subtrees_of_clique_trees_are_clique_trees():
    rng = random.Random(99)
    for seed in range(150):
        g = gen_random_chordal(rng.randrange(2, 12), rng.random(), seed)
        t = clique_tree(g)
        if t.node_count < 2 or len(t.edges) == 0:
            continue
        # grow a random connected subtree
        adj = {i: t.neighbors(i) for i in range(t.node_count)}
        start = rng.randrange(t.node_count)
        chosen = {start}
        frontier = set(adj[start])
        while frontier and rng.random() < 0.7:
            nxt = rng.choice(sorted(frontier))
            chosen.add(nxt)
            frontier |= set(adj[nxt]) - chosen
            frontier.discard(nxt)
        sub_nodes = sorted(chosen)
        relabel = {old: new for new, old in enumerate(sub_nodes)}
        union = sorted(set().union(*(t.nodes[i] for i in chosen)))
        induced, mapping = g.induced_subgraph(union)
        to_new = {orig: i for i, orig in enumerate(mapping)}
        new_nodes = tuple(
            frozenset(to_new[v] for v in t.nodes[i]) for i in sub_nodes
        )
        new_edges = tuple(
            sorted(
                (relabel[i], relabel[j])
                for i, j in t.edges
                if i in chosen and j in chosen
            )
        )
        sub_tree = CliqueTree(
            new_nodes,
            new_edges,
            tuple(new_nodes[i] & new_nodes[j] for i, j in new_edges),
        )
        assert verify_clique_tree(induced, sub_tree)


def test_mis_membership_examples():
    counts, flag = mis_membership_counts(gen_fig_graph("fig2").graph)
    assert counts == (1, 2, 2, 2, 1) and flag

    counts, flag = mis_membership_counts(gen_fig_graph("fig3").graph)
    assert counts == (1, 2, 3, 3, 2, 1) and not flag

    counts, flag = mis_membership_counts(complete_graph(6))
    assert counts == (1,) * 6 and flag

    with pytest.raises(NotChordalError):
        mis_membership_counts(cycle_graph(5))  # C5 complement is C5


def test_clique_tree_serialization():
    text = clique_tree_to_text(clique_tree(path_graph(3)))
    assert text == "K0: 0 1\nK1: 1 2\nT: 0 1 | mid: 1\n"
