import itertools

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from clustermut.analytics import (
    centrality_summary,
    clustering_coefficients,
    cycle_basis_profile,
    density,
    eigenvector_centrality,
    full_stats,
    minimum_cycle_basis,
    wiener_index,
)
from clustermut.errors import DomainError
from clustermut.exchange_graph import generate_seed_eg
from clustermut.mutation import builtin_seed


def random_connected_graphs(max_n=9):
    """Connected simple graphs: a random spanning tree plus extra edges."""

    @st.composite
    def build(draw):
        n = draw(st.integers(3, max_n))
        edges = set()
        for v in range(1, n):
            edges.add((draw(st.integers(0, v - 1)), v))
        extra = draw(st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=12))
        for a, b in extra:
            if a != b:
                edges.add((min(a, b), max(a, b)))
        return n, edges

    return build()


def cycle_edge_set(cycle):
    out = set()
    for i, a in enumerate(cycle):
        b = cycle[(i + 1) % len(cycle)]
        out.add((min(a, b), max(a, b)))
    return out


def gf2_rank(vectors):
    rank = 0
    pivots = {}
    for vec in vectors:
        v = vec
        while v:
            low = v & -v
            if low in pivots:
                v ^= pivots[low]
            else:
                pivots[low] = v
                rank += 1
                break
    return rank


def test_density_complete_graph():
    edges = {(a, b) for a in range(5) for b in range(a + 1, 5)}
    assert density(5, edges) == 1.0


def test_density_path():
    assert density(4, {(0, 1), (1, 2), (2, 3)}) == pytest.approx(0.5)


def test_wiener_path_graph():
    # P4 pair distances: 1+2+3 + 1+2 + 1 = 10
    full, norm = wiener_index(4, {(0, 1), (1, 2), (2, 3)})
    assert full == 10
    assert norm == pytest.approx(10 / 6)


def test_wiener_disconnected_rejected():
    with pytest.raises(DomainError):
        wiener_index(4, {(0, 1), (2, 3)})


@settings(max_examples=100, deadline=None)
@given(random_connected_graphs())
def test_wiener_matches_networkx(graph):
    n, edges = graph
    g = nx.Graph(list(edges))
    g.add_nodes_from(range(n))
    assert wiener_index(n, edges)[0] == int(nx.wiener_index(g))


@settings(max_examples=60, deadline=None)
@given(random_connected_graphs())
def test_centrality_matches_networkx(graph):
    n, edges = graph
    ours = eigenvector_centrality(n, edges)
    g = nx.Graph(list(edges))
    g.add_nodes_from(range(n))
    theirs = nx.eigenvector_centrality_numpy(g)
    top_ours = max(range(n), key=lambda v: ours[v])
    top_theirs = max(range(n), key=lambda v: theirs[v])
    assert abs(ours[top_ours] - abs(theirs[top_theirs])) < 1e-6


def test_centrality_star_centre():
    edges = {(0, v) for v in range(1, 6)}
    centre, diff = centrality_summary(6, edges, list(range(1, 6)))
    assert centre == 0
    assert diff is not None and diff > 0


def test_centrality_cycle_has_no_strict_centre():
    edges = cycle_edge_set(list(range(6)))
    centre, diff = centrality_summary(6, edges, [1, 5])
    assert centre is None and diff is None


def test_mcb_k4():
    edges = {(a, b) for a in range(4) for b in range(a + 1, 4)}
    cycles = minimum_cycle_basis(4, edges)
    assert cycle_basis_profile(cycles) == [(3, 3)]


def test_mcb_single_cycle():
    cycles = minimum_cycle_basis(5, cycle_edge_set(list(range(5))))
    assert len(cycles) == 1
    assert sorted(cycles[0]) == [0, 1, 2, 3, 4]


@settings(max_examples=100, deadline=None)
@given(random_connected_graphs())
def test_mcb_cardinality_and_independence(graph):
    n, edges = graph
    cycles = minimum_cycle_basis(n, edges)
    # cyclomatic number E - V + 1 for a connected graph
    assert len(cycles) == len(edges) - n + 1
    edge_index = {e: i for i, e in enumerate(sorted(edges))}
    vectors = []
    for cycle in cycles:
        vec = 0
        for e in cycle_edge_set(cycle):
            assert e in edge_index
            vec |= 1 << edge_index[e]
        vectors.append(vec)
    assert gf2_rank(vectors) == len(cycles)


@settings(max_examples=40, deadline=None)
@given(random_connected_graphs(max_n=7))
def test_mcb_total_weight_is_minimum(graph):
    n, edges = graph
    ours = sum(len(c) for c in minimum_cycle_basis(n, edges))
    g = nx.Graph(list(edges))
    g.add_nodes_from(range(n))
    theirs = sum(len(c) for c in nx.minimum_cycle_basis(g))
    assert ours == theirs


def test_clustering_square_example():
    # C4 has square clustering > 0 but no triangles
    edges = cycle_edge_set([0, 1, 2, 3])
    tri, squ = clustering_coefficients(4, edges)
    assert tri == 0.0
    assert squ > 0


def test_full_stats_on_graph():
    g = generate_seed_eg(builtin_seed("A3"), 4)
    stats = full_stats(g)
    assert stats.n_vertices == 32
    assert stats.clustering_triangle == 0.0
    assert all(length % 2 == 0 for length, _ in stats.cycle_profile)
    assert sum(f for _, f in stats.cycle_profile) == stats.n_edges - stats.n_vertices + 1
