from __future__ import annotations

import pytest

from clawham.constructions import (
    canonical_key,
    complete_graph,
    cube_graph,
    cycle_graph,
    graph_power,
    line_graph,
    path_graph,
    petersen_graph,
    star_graph,
    triangular_ladder,
    wheel_graph,
)
from clawham.errors import DomainError
from clawham.graph import FiniteGraph, is_connected
from clawham.predicates import is_claw_free, is_locally_connected
from helpers import bfs_distance_oracle, adjacency_dict


def test_power_examples():
    p3sq = graph_power(path_graph(3), 2)
    assert p3sq.edge_count() == 3  # a triangle
    c4sq = graph_power(cycle_graph(4), 2)
    assert c4sq.edge_count() == 6  # complete on 4
    p6sq = graph_power(path_graph(6), 2)
    assert is_claw_free(p6sq).holds and is_locally_connected(p6sq).holds


def test_power_one_is_identity_and_diameter_completes():
    for g in (path_graph(5), cycle_graph(6), petersen_graph()):
        assert graph_power(g, 1) == g
        diam = max(
            max(bfs_distance_oracle(adjacency_dict(g), [v]).values())
            for v in g.vertices
        )
        assert graph_power(g, diam) == complete_graph(len(g))


def test_power_distance_semantics():
    g = path_graph(7)
    cube = graph_power(g, 3)
    dist = bfs_distance_oracle(adjacency_dict(g), [0])
    for v in range(1, 7):
        assert cube.has_edge(0, v) == (dist[v] <= 3)


def test_line_graph_examples():
    assert line_graph(complete_graph(3)).graph == complete_graph(3)
    assert line_graph(star_graph(3)).graph == complete_graph(3)
    lp4 = line_graph(path_graph(4)).graph
    assert lp4 == path_graph(3)


def test_line_graph_labels_read_back():
    lg = line_graph(cycle_graph(5))
    assert len(lg.graph) == 5
    labels = lg.edges_of_cycle(lg.graph.vertices)
    assert sorted(labels) == sorted(cycle_graph(5).edges())


def test_line_graph_rejects_edgeless():
    with pytest.raises(DomainError):
        line_graph(FiniteGraph(range(3), []))


def test_enumeration_counts_match_literature(small_graphs):
    # numbers of graphs / connected graphs per vertex count, up to isomorphism
    assert [len(small_graphs[n]) for n in range(1, 8)] == [1, 2, 4, 11, 34, 156, 1044]
    connected = [len([g for g in small_graphs[n] if is_connected(g)]) for n in range(1, 8)]
    assert connected == [1, 1, 2, 6, 21, 112, 853]


def test_enumeration_is_isomorphism_free(small_graphs):
    for n in (4, 5):
        keys = set()
        for g in small_graphs[n]:
            masks = [0] * n
            for u, v in g.edges():
                masks[u] |= 1 << v
                masks[v] |= 1 << u
            keys.add(canonical_key(n, masks))
        assert len(keys) == len(small_graphs[n])


def test_canonical_key_invariant_under_relabeling():
    import random

    rng = random.Random(7)
    g = petersen_graph()
    n = len(g)

    def key_of(perm):
        masks = [0] * n
        for u, v in g.edges():
            masks[perm[u]] |= 1 << perm[v]
            masks[perm[v]] |= 1 << perm[u]
        return canonical_key(n, masks)

    base = key_of(list(range(n)))
    for _ in range(5):
        perm = list(range(n))
        rng.shuffle(perm)
        assert key_of(perm) == base


def test_named_graphs_shapes():
    assert wheel_graph(5).degree(0) == 5
    assert cube_graph().edge_count() == 12
    tl = triangular_ladder(5)
    # every edge lies in a triangle
    for u, v in tl.edges():
        assert any(tl.has_edge(u, w) and tl.has_edge(v, w) for w in tl.vertices)
