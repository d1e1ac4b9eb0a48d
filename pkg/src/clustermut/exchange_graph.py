"""Breadth-first generation of seed and quiver exchange graphs.

Vertices are numbered in discovery order: the frontier is processed FIFO
and mutation indices ascending, so two runs with identical inputs produce
identical numbering and edge sets.  Vertices at the depth limit are not
expanded, so edges requiring a mutation of a limit-depth vertex are absent
(matching the truncation used for the depth-4 analyses).
"""

from __future__ import annotations

import csv
import io
import json
from collections import deque
from dataclasses import dataclass, field

from .errors import DomainError, ResourceLimitError
from .laurent import LaurentValue, Polynomial, laurent_normalize
from .mutation import (
    Matrix,
    Seed,
    as_matrix,
    initial_seed,
    matrix_canonical_key,
    mutate_cluster,
    mutate_matrix,
    seed_canonical_key,
)

DEFAULT_MAX_VERTICES = 500_000
DEFAULT_MAX_TERMS = 50_000_000


@dataclass
class ExchangeGraph:
    payload: str                     # "seeds" | "quivers"
    mode: str                        # "exact" | "permutation"
    rank: int
    payloads: list                   # Seed objects or Matrix tuples
    depths: list[int]
    edges: set[tuple[int, int, int]]  # (a, b, k) with a < b
    depth_limit: int | None          # None = generated to closure
    closure_depth: int | None = None
    algebra: str | None = None
    partial: bool = False

    @property
    def n_vertices(self) -> int:
        return len(self.payloads)

    @property
    def n_edges(self) -> int:
        """Distinct vertex pairs joined by at least one mutation."""
        return len({(a, b) for a, b, _ in self.edges})

    def edge_pairs(self) -> set[tuple[int, int]]:
        return {(a, b) for a, b, _ in self.edges}

    def pair_labels(self) -> dict[tuple[int, int], set[int]]:
        """Mutation indices realizing each vertex pair."""
        labels: dict[tuple[int, int], set[int]] = {}
        for a, b, k in self.edges:
            labels.setdefault((a, b), set()).add(k)
        return labels

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n_vertices)]
        for a, b in sorted(self.edge_pairs()):
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def seeds_per_depth(self) -> list[int]:
        """Cumulative vertex count at each depth, index 0 = depth 0."""
        maxd = max(self.depths)
        counts = [0] * (maxd + 1)
        for d in self.depths:
            counts[d] += 1
        out = []
        total = 0
        for c in counts:
            total += c
            out.append(total)
        return out

    # -- serialization -----------------------------------------------

    def to_json_dict(self) -> dict:
        vertices = []
        for i, payload in enumerate(self.payloads):
            entry = {"id": i, "depth": self.depths[i]}
            if self.payload == "seeds":
                entry["seed"] = seed_to_json(payload)
            else:
                entry["matrix"] = [list(row) for row in payload]
            vertices.append(entry)
        return {
            "payload": self.payload,
            "mode": self.mode,
            "rank": self.rank,
            "algebra": self.algebra,
            "depth": "closed" if self.depth_limit is None else self.depth_limit,
            "closure_depth": self.closure_depth,
            "partial": self.partial,
            "vertices": vertices,
            "edges": sorted([a, b, k] for a, b, k in self.edges),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "ExchangeGraph":
        payload_kind = data["payload"]
        payloads = []
        depths = []
        for entry in data["vertices"]:
            depths.append(entry["depth"])
            if payload_kind == "seeds":
                payloads.append(seed_from_json(entry["seed"]))
            else:
                payloads.append(as_matrix(entry["matrix"]))
        return cls(
            payload=payload_kind,
            mode=data["mode"],
            rank=data["rank"],
            payloads=payloads,
            depths=depths,
            edges={(a, b, k) for a, b, k in data["edges"]},
            depth_limit=None if data["depth"] == "closed" else data["depth"],
            closure_depth=data.get("closure_depth"),
            algebra=data.get("algebra"),
            partial=data.get("partial", False),
        )

    def to_dot(self) -> str:
        lines = ["graph exchange {"]
        for i in range(self.n_vertices):
            lines.append(f'  {i} [label="{i}"];')
        for a, b, k in sorted(self.edges):
            lines.append(f'  {a} -- {b} [label="{k}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["vertex_a", "vertex_b", "mutation_index"])
        for a, b, k in sorted(self.edges):
            writer.writerow([a, b, k])
        return buf.getvalue()


def seed_to_json(seed: Seed) -> dict:
    cluster = []
    for value in seed.cluster:
        cluster.append(
            {
                "num": [[str(c), *exps] for exps, c in value.num.terms_sorted()],
                "den": list(value.den_exponents()),
            }
        )
    return {
        "rank": seed.rank,
        "matrix": [list(row) for row in seed.matrix],
        "cluster": cluster,
    }


def seed_from_json(data: dict) -> Seed:
    r = data["rank"]
    cluster = []
    for var in data["cluster"]:
        terms = {tuple(block[1:]): int(block[0]) for block in var["num"]}
        cluster.append(laurent_normalize(Polynomial.from_terms(r, terms), tuple(var["den"])))
    return Seed(tuple(cluster), as_matrix(data["matrix"]))


def _seed_terms(seed: Seed) -> int:
    return sum(len(v.num) for v in seed.cluster)


def _generate(
    initial,
    payload: str,
    depth: int | None,
    mode: str,
    algebra: str | None,
    max_vertices: int,
    max_terms: int | None,
) -> ExchangeGraph:
    if payload == "seeds":
        start = initial
        key_fn = lambda s: seed_canonical_key(s, mode)
        step_fn = mutate_cluster
    elif payload == "quivers":
        start = initial.matrix if isinstance(initial, Seed) else as_matrix(initial)
        key_fn = lambda b: matrix_canonical_key(b, mode)
        step_fn = mutate_matrix
    else:
        raise DomainError(f"unknown payload kind {payload!r}")

    rank = initial.rank if isinstance(initial, Seed) else len(start)
    payloads = [start]
    depths = [0]
    index = {key_fn(start): 0}
    edges: set[tuple[int, int, int]] = set()
    frontier = deque([0])
    terms = _seed_terms(start) if payload == "seeds" else 0

    def guard_fail(reason: str, completed: int) -> ResourceLimitError:
        graph = ExchangeGraph(
            payload=payload,
            mode=mode,
            rank=rank,
            payloads=payloads,
            depths=depths,
            edges=edges,
            depth_limit=depth,
            algebra=algebra,
            partial=True,
        )
        return ResourceLimitError(reason, partial=graph, completed_depth=completed)

    while frontier:
        v = frontier.popleft()
        d = depths[v]
        if depth is not None and d >= depth:
            continue
        for k in range(rank):
            result = step_fn(payloads[v], k)
            key = key_fn(result)
            u = index.get(key)
            if u is None:
                if len(payloads) >= max_vertices:
                    raise guard_fail(
                        f"vertex cap {max_vertices} exceeded", max(d - 1, 0)
                    )
                if payload == "seeds" and max_terms is not None:
                    terms += _seed_terms(result)
                    if terms > max_terms:
                        raise guard_fail(
                            f"numerator term cap {max_terms} exceeded", max(d - 1, 0)
                        )
                u = len(payloads)
                payloads.append(result)
                depths.append(d + 1)
                index[key] = u
                frontier.append(u)
            if u != v:
                edges.add((min(v, u), max(v, u), k))

    closure_depth = max(depths) if depth is None else None
    return ExchangeGraph(
        payload=payload,
        mode=mode,
        rank=rank,
        payloads=payloads,
        depths=depths,
        edges=edges,
        depth_limit=depth,
        closure_depth=closure_depth,
        algebra=algebra,
    )


def generate_seed_eg(
    initial: Seed,
    depth: int | None,
    mode: str = "exact",
    algebra: str | None = None,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    max_terms: int | None = DEFAULT_MAX_TERMS,
) -> ExchangeGraph:
    """Seed exchange graph to the given depth (None = to closure)."""
    if depth is not None and depth < 0:
        raise DomainError("depth must be >= 0")
    return _generate(initial, "seeds", depth, mode, algebra, max_vertices, max_terms)


def generate_quiver_eg(
    initial,
    depth: int | None,
    mode: str = "exact",
    algebra: str | None = None,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> ExchangeGraph:
    """Quiver exchange graph: vertices are distinct exchange matrices."""
    if depth is not None and depth < 0:
        raise DomainError("depth must be >= 0")
    return _generate(initial, "quivers", depth, mode, algebra, max_vertices, None)


def generate_full(
    initial,
    mode: str = "exact",
    payload: str = "seeds",
    algebra: str | None = None,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    max_terms: int | None = DEFAULT_MAX_TERMS,
) -> ExchangeGraph:
    """Generate to closure; every vertex is expanded, so the edge set is
    complete.  Non-closing algebras trip the vertex cap."""
    if payload == "seeds":
        return generate_seed_eg(
            initial, None, mode, algebra, max_vertices=max_vertices, max_terms=max_terms
        )
    return generate_quiver_eg(initial, None, mode, algebra, max_vertices=max_vertices)


def seeds_per_depth(graph: ExchangeGraph) -> list[int]:
    return graph.seeds_per_depth()
