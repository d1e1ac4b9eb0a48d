"""Network analysis for exchange graphs.

Operates on a plain undirected simple graph given as a vertex count and a
set of (a, b) pairs with a < b.  Triangle/square clustering coefficients
delegate to networkx; shortest paths, eigenvector centrality and the
minimum cycle basis are computed here directly.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

import networkx as nx

from .errors import ConvergenceError, DomainError

CENTRE_SPREAD_TOL = 1e-8


def _as_graph(n: int, edges) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    return g


def density(n: int, edges) -> float:
    if n < 2:
        return 0.0
    return len(set(edges)) / (n * (n - 1) / 2)


def clustering_coefficients(n: int, edges) -> tuple[float, float]:
    """(average triangle clustering, average square clustering)."""
    g = _as_graph(n, edges)
    tri = nx.average_clustering(g)
    squ = sum(nx.square_clustering(g).values()) / n
    return tri, squ


def _bfs_distances(adj: list[list[int]], source: int) -> list[int]:
    dist = [-1] * len(adj)
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def adjacency_lists(n: int, edges) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for a, b in sorted(set(edges)):
        adj[a].append(b)
        adj[b].append(a)
    return adj


def wiener_index(n: int, edges) -> tuple[int, float]:
    """(sum of all-pairs shortest paths, that sum / nC2)."""
    adj = adjacency_lists(n, edges)
    total = 0
    for v in range(n):
        dist = _bfs_distances(adj, v)
        if min(dist) < 0:
            raise DomainError("wiener index requires a connected graph")
        total += sum(dist)
    total //= 2
    pairs = n * (n - 1) // 2
    return total, total / pairs if pairs else 0.0


def eigenvector_centrality(
    n: int, edges, tol: float = 1e-10, max_iter: int = 1_000_000
) -> list[float]:
    """Power iteration for the leading adjacency eigenvector; L2-normalised.

    Iterates with A + I: same eigenvectors, but the shift breaks the ±λ
    degeneracy of bipartite graphs (which every exchange graph is, since
    all its cycles are even).
    """
    adj = adjacency_lists(n, edges)
    x = [1.0 / math.sqrt(n)] * n
    for _ in range(max_iter):
        y = [x[v] + sum(x[u] for u in adj[v]) for v in range(n)]
        norm = math.sqrt(sum(t * t for t in y))
        if norm == 0.0:
            raise ConvergenceError("zero vector in power iteration")
        y = [t / norm for t in y]
        if max(abs(a - b) for a, b in zip(x, y)) < tol:
            return y
        x = y
    raise ConvergenceError(f"power iteration did not converge in {max_iter} steps")


def centrality_summary(
    n: int, edges, depth_one: list[int] | None = None
) -> tuple[int | None, float | None]:
    """(centre vertex or None when the spread is below tolerance,
    smallest centrality gap from vertex 0 down to its depth-1 vertices
    when vertex 0 is the centre)."""
    c = eigenvector_centrality(n, edges)
    if max(c) - min(c) < CENTRE_SPREAD_TOL:
        return None, None
    centre = max(range(n), key=lambda v: c[v])
    diff = None
    if centre == 0 and depth_one:
        diff = min(c[0] - c[v] for v in depth_one)
    return centre, diff


# -- minimum cycle basis ---------------------------------------------------

def _bfs_tree(adj: list[list[int]], source: int) -> tuple[list[int], list[int]]:
    parent = [-1] * len(adj)
    dist = [-1] * len(adj)
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                parent[u] = v
                queue.append(u)
    return parent, dist


def _path_to_root(parent: list[int], v: int) -> list[int]:
    path = [v]
    while parent[v] >= 0:
        v = parent[v]
        path.append(v)
    return path


def minimum_cycle_basis(n: int, edges) -> list[list[int]]:
    """Minimum-weight cycle basis of an unweighted graph.

    Horton candidate cycles (shortest-path tree from every vertex plus one
    non-tree edge) are screened for independence by Gaussian elimination
    over GF(2), processed in order of increasing length so the greedy
    selection is minimum.  Returns each basis cycle as an ordered vertex
    list.
    """
    edge_list = sorted(set(edges))
    edge_index = {e: i for i, e in enumerate(edge_list)}
    adj = adjacency_lists(n, edge_list)

    components = 0
    seen = [False] * n
    for v in range(n):
        if not seen[v]:
            components += 1
            for u, d in enumerate(_bfs_distances(adj, v)):
                if d >= 0:
                    seen[u] = True
    rank = len(edge_list) - n + components
    if rank == 0:
        return []

    # candidate cycles bucketed by length; only materialised lazily
    buckets: dict[int, list[tuple[int, int, int]]] = {}
    trees = {}
    for v in range(n):
        parent, dist = _bfs_tree(adj, v)
        trees[v] = parent
        for x, y in edge_list:
            if dist[x] < 0 or dist[y] < 0:
                continue
            if parent[x] == y or parent[y] == x:
                continue
            length = dist[x] + dist[y] + 1
            buckets.setdefault(length, []).append((v, x, y))

    pivots: dict[int, int] = {}
    basis: list[list[int]] = []
    seen_masks: set[int] = set()
    for length in sorted(buckets):
        for v, x, y in buckets[length]:
            parent = trees[v]
            px = _path_to_root(parent, x)
            py = _path_to_root(parent, y)
            if set(px) & set(py) != {v}:
                continue  # not a simple cycle through v
            cycle = px[::-1] + py[:-1]
            mask = 0
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                mask |= 1 << edge_index[(min(a, b), max(a, b))]
            if mask in seen_masks:
                continue
            seen_masks.add(mask)
            reduced = mask
            while reduced:
                top = reduced.bit_length() - 1
                row = pivots.get(top)
                if row is None:
                    break
                reduced ^= row
            if reduced:
                pivots[reduced.bit_length() - 1] = reduced
                basis.append(cycle)
                if len(basis) == rank:
                    return basis
    if len(basis) < rank:
        raise ConvergenceError(
            f"cycle basis incomplete: {len(basis)} of {rank} cycles found"
        )
    return basis


def cycle_basis_profile(cycles: list[list[int]]) -> list[tuple[int, int]]:
    """Sorted [length, frequency] pairs of a cycle list."""
    counts: dict[int, int] = {}
    for cycle in cycles:
        counts[len(cycle)] = counts.get(len(cycle), 0) + 1
    return sorted(counts.items())


@dataclass
class GraphStats:
    n_vertices: int
    n_edges: int
    density: float
    clustering_triangle: float
    clustering_square: float
    wiener_full: int
    wiener_norm: float
    centre: int | None
    centrality_diff: float | None
    cycle_profile: list[tuple[int, int]]


def full_stats(graph) -> GraphStats:
    """All table statistics for an ExchangeGraph."""
    n = graph.n_vertices
    edges = graph.edge_pairs()
    tri, squ = clustering_coefficients(n, edges)
    wf, wn = wiener_index(n, edges)
    depth_one = [v for v in range(n) if graph.depths[v] == 1]
    centre, diff = centrality_summary(n, edges, depth_one)
    cycles = minimum_cycle_basis(n, edges)
    return GraphStats(
        n_vertices=n,
        n_edges=len(edges),
        density=density(n, edges),
        clustering_triangle=tri,
        clustering_square=squ,
        wiener_full=wf,
        wiener_norm=wn,
        centre=centre,
        centrality_diff=diff,
        cycle_profile=cycle_basis_profile(cycles),
    )
