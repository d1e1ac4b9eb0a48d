"""Counting identities and quiver-to-seed cycle embeddings.

Links the quiver exchange graph of a finite-type algebra to its seed
exchange graph: predicted cluster counts from root-system data, the
permutation factor between seed counts with and without permutation
identification, and how each quiver-graph cycle lifts to a set of longer
cycles in the seed graph (scale factor p, copy factor q).
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .analytics import cycle_basis_profile, minimum_cycle_basis
from .errors import DomainError
from .exchange_graph import ExchangeGraph
from .mutation import Matrix, matrix_canonical_key


def _series_rank(name: str) -> tuple[str, int]:
    series, rank = name[0], name[1:]
    if series in "ABCDFG" and rank.isdigit() and int(rank) >= 1:
        return series, int(rank)
    raise DomainError(f"not a Dynkin type name: {name!r}")


def root_system_data(name: str) -> tuple[list[int], int]:
    """(exponents, Coxeter number) of a Dynkin type, e.g. "D4"."""
    series, r = _series_rank(name)
    if series == "A":
        return list(range(1, r + 1)), r + 1
    if series in "BC":
        if r < 2:
            raise DomainError(f"rank {r} too small for series {series}")
        return [2 * i - 1 for i in range(1, r + 1)], 2 * r
    if series == "D":
        if r < 3:
            raise DomainError(f"rank {r} too small for series D")
        exps = sorted(list(range(1, 2 * r - 2, 2)) + [r - 1])
        return exps, 2 * r - 2
    if name == "F4":
        return [1, 5, 7, 11], 12
    if name == "G2":
        return [1, 5], 6
    raise DomainError(f"no root system data for {name!r}")


def cluster_count(name: str) -> int:
    """Number of clusters up to permutation equivalence: the product of
    (e_i + h + 1)/(e_i + 1) over the root-system exponents."""
    exps, h = root_system_data(name)
    value = Fraction(1)
    for e in exps:
        value *= Fraction(e + h + 1, e + 1)
    if value.denominator != 1:
        raise DomainError(f"non-integer cluster count for {name!r}")
    return int(value)


def _factorial(k: int) -> int:
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def permutation_factor(matrix: Matrix) -> int:
    """Number of simultaneous cluster/matrix permutations realised by
    mutation: the product of factorials of the sizes of the components
    connected by simply-laced edges only (|b_ij| = |b_ji| = 1)."""
    n = len(matrix)
    parent = list(range(n))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for i in range(n):
        for j in range(i + 1, n):
            if abs(matrix[i][j]) == 1 and abs(matrix[j][i]) == 1:
                parent[find(i)] = find(j)
    sizes = Counter(find(v) for v in range(n))
    out = 1
    for s in sizes.values():
        out *= _factorial(s)
    return out


def seed_quiver_ratio(seed_graph: ExchangeGraph, quiver_graph: ExchangeGraph) -> Fraction:
    return Fraction(seed_graph.n_vertices, quiver_graph.n_vertices)


# -- cycle embedding -------------------------------------------------------

@dataclass
class CycleEmbedding:
    quiver_cycle: list[int]     # QEG vertex ids
    scale: int                  # p: embedded length / quiver length
    copies: int                 # q: number of embedded cycles
    seed_cycles: list[list[int]]

    @property
    def product(self) -> int:
        return self.scale * self.copies


def _seed_quiver_ids(seed_graph: ExchangeGraph, quiver_graph: ExchangeGraph) -> list[int]:
    """Map each seed-graph vertex to the quiver-graph vertex holding its
    exchange matrix."""
    mode = quiver_graph.mode
    lookup = {
        matrix_canonical_key(m, mode): i for i, m in enumerate(quiver_graph.payloads)
    }
    out = []
    for seed in seed_graph.payloads:
        key = matrix_canonical_key(seed.matrix, mode)
        if key not in lookup:
            raise DomainError("seed matrix missing from quiver graph")
        out.append(lookup[key])
    return out


def _components(vertices: list[int], adj: dict[int, list[int]]) -> list[list[int]]:
    seen = set()
    comps = []
    for v in vertices:
        if v in seen:
            continue
        comp = [v]
        seen.add(v)
        stack = [v]
        while stack:
            w = stack.pop()
            for u in adj[w]:
                if u not in seen:
                    seen.add(u)
                    comp.append(u)
                    stack.append(u)
        comps.append(comp)
    return comps


def _walk_cycle(comp: list[int], adj: dict[int, list[int]]) -> list[int]:
    start = min(comp)
    order = [start]
    prev, cur = None, start
    while True:
        a, b = adj[cur]
        nxt = b if a == prev else a
        if nxt == start:
            return order
        order.append(nxt)
        prev, cur = cur, nxt


def embed_cycle(
    seed_graph: ExchangeGraph,
    quiver_graph: ExchangeGraph,
    cycle: list[int],
    seed_quiver_ids: list[int] | None = None,
) -> CycleEmbedding:
    """Lift a quiver-graph cycle into the seed graph.

    Takes the seed-graph subgraph of the seeds whose matrices lie on the
    cycle, keeping only edges that project onto a consecutive cycle pair.
    For a valid lift this subgraph is 2-regular and splits into q cycles
    of p times the quiver cycle's length.
    """
    if seed_quiver_ids is None:
        seed_quiver_ids = _seed_quiver_ids(seed_graph, quiver_graph)
    s = len(cycle)
    on_cycle = set(cycle)
    labels = quiver_graph.pair_labels()
    step_keys = set()
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        ks = labels.get((min(a, b), max(a, b)), set())
        for k in ks:
            step_keys.add((a, b, k))
            step_keys.add((b, a, k))

    vertices = [v for v in range(seed_graph.n_vertices) if seed_quiver_ids[v] in on_cycle]
    adj: dict[int, list[int]] = {v: [] for v in vertices}
    for a, b, k in seed_graph.edges:
        if (seed_quiver_ids[a], seed_quiver_ids[b], k) in step_keys:
            adj[a].append(b)
            adj[b].append(a)

    degs = {len(nbrs) for nbrs in adj.values()}
    if degs != {2}:
        raise DomainError(
            f"cycle lift is not 2-regular (degrees {sorted(degs)}); "
            "the embedding is not well defined for this cycle"
        )
    comps = _components(vertices, adj)
    lengths = {len(c) for c in comps}
    if len(lengths) != 1:
        raise DomainError(f"cycle lift has mixed component sizes {sorted(lengths)}")
    t = lengths.pop()
    if t % s:
        raise DomainError(f"lifted length {t} is not a multiple of cycle length {s}")
    seed_cycles = [_walk_cycle(c, adj) for c in comps]
    return CycleEmbedding(
        quiver_cycle=list(cycle),
        scale=t // s,
        copies=len(comps),
        seed_cycles=seed_cycles,
    )


@dataclass
class EmbeddingProfile:
    quiver_mcb: list[tuple[int, int]]   # [length, freq] of the QEG basis
    scale_hist: list[tuple[int, int]]   # [p, freq]
    copy_hist: list[tuple[int, int]]    # [q, freq]
    products: set[int]                  # distinct p*q values


def mcb_embedding_profile(
    seed_graph: ExchangeGraph, quiver_graph: ExchangeGraph
) -> EmbeddingProfile:
    """Embed every cycle of the quiver graph's minimum cycle basis."""
    cycles = minimum_cycle_basis(quiver_graph.n_vertices, quiver_graph.edge_pairs())
    ids = _seed_quiver_ids(seed_graph, quiver_graph)
    scales: Counter = Counter()
    copies: Counter = Counter()
    products = set()
    for cycle in cycles:
        emb = embed_cycle(seed_graph, quiver_graph, cycle, ids)
        scales[emb.scale] += 1
        copies[emb.copies] += 1
        products.add(emb.product)
    return EmbeddingProfile(
        quiver_mcb=cycle_basis_profile(cycles),
        scale_hist=sorted(scales.items()),
        copy_hist=sorted(copies.items()),
        products=products,
    )


def orbit_permutations(seed_graph: ExchangeGraph) -> list[tuple[int, ...]]:
    """Variable permutations realised by mutation: all sigma such that
    permuting the initial seed's cluster positions (and its matrix rows and
    columns in step) lands on another vertex of the exact-mode full graph."""
    if seed_graph.payload != "seeds":
        raise DomainError("orbit permutations need a seed graph")
    r = seed_graph.rank
    keys = {seed.key() for seed in seed_graph.payloads}
    initial = seed_graph.payloads[0]
    out = []
    for sigma in itertools.permutations(range(r)):
        cluster = tuple(initial.cluster[sigma[i]] for i in range(r))
        matrix = tuple(
            tuple(initial.matrix[sigma[i]][sigma[j]] for j in range(r))
            for i in range(r)
        )
        if (tuple(v.key() for v in cluster), matrix) in keys:
            out.append(sigma)
    return out


def commuting_cycles(quiver_graph: ExchangeGraph, length: int = 4) -> list[list[int]]:
    """Quiver-graph 4-cycles built from two commuting mutations, i.e. the
    two step labels alternate around the cycle; these always lift with
    scale factor 1."""
    labels = quiver_graph.pair_labels()
    adj: dict[int, list[tuple[int, int]]] = {}
    for (a, b), ks in labels.items():
        for k in ks:
            adj.setdefault(a, []).append((b, k))
            adj.setdefault(b, []).append((a, k))
    out = []
    seen = set()
    for v0 in sorted(adj):
        for v1, k1 in adj[v0]:
            for v2, k2 in adj.get(v1, []):
                if v2 == v0 or k2 == k1:
                    continue
                for v3, k3 in adj.get(v2, []):
                    if k3 != k1 or v3 in (v0, v1):
                        continue
                    for v4, k4 in adj.get(v3, []):
                        if v4 == v0 and k4 == k2:
                            key = frozenset([v0, v1, v2, v3])
                            if key not in seen:
                                seen.add(key)
                                out.append([v0, v1, v2, v3])
    return out
