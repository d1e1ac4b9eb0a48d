"""Seeds, exchange matrices, mutation, canonical forms, and the built-in
catalogue of initial seeds.

Matrices are plain tuples of tuples of ints; cluster variables are exact
:class:`~clustermut.laurent.LaurentValue` objects over the initial variables.
Cluster position i is permanently bound to matrix row/column i, and the
mutation index is positional.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DomainError, ExactDivisionError, MutationError, ResourceLimitError
from .laurent import LaurentValue

Matrix = tuple[tuple[int, ...], ...]


def as_matrix(rows) -> Matrix:
    mat = tuple(tuple(int(x) for x in row) for row in rows)
    n = len(mat)
    if any(len(row) != n for row in mat):
        raise DomainError("exchange matrix must be square")
    return mat


def validate_matrix(b: Matrix) -> None:
    n = len(b)
    for i in range(n):
        if b[i][i] != 0:
            raise DomainError("exchange matrix must have zero diagonal")
        for j in range(n):
            if b[i][j] * b[j][i] > 0:
                raise DomainError("sign coherence violated: b_ij and b_ji share sign")
            if (b[i][j] == 0) != (b[j][i] == 0):
                raise DomainError("sign coherence violated: one-sided zero entry")


@dataclass(frozen=True)
class Seed:
    cluster: tuple[LaurentValue, ...]
    matrix: Matrix

    @property
    def rank(self) -> int:
        return len(self.cluster)

    def key(self) -> tuple:
        return (tuple(v.key() for v in self.cluster), self.matrix)


def initial_seed(matrix) -> Seed:
    b = as_matrix(matrix)
    validate_matrix(b)
    r = len(b)
    return Seed(tuple(LaurentValue.variable(r, i) for i in range(r)), b)


def mutate_matrix(b: Matrix, k: int) -> Matrix:
    """Matrix mutation at index k (four-case rule)."""
    n = len(b)
    if not 0 <= k < n:
        raise DomainError(f"mutation index {k} out of range for rank {n}")
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == k or j == k:
                row.append(-b[i][j])
            elif b[i][k] > 0 and b[k][j] > 0:
                row.append(b[i][j] + b[i][k] * b[k][j])
            elif b[i][k] < 0 and b[k][j] < 0:
                row.append(b[i][j] - b[i][k] * b[k][j])
            else:
                row.append(b[i][j])
        out.append(tuple(row))
    return tuple(out)


def exchange_value(cluster: tuple[LaurentValue, ...], b: Matrix, k: int) -> LaurentValue:
    """The replacement variable at position k for the given cluster/matrix."""
    r = len(cluster)
    plus = LaurentValue.one(r)
    minus = LaurentValue.one(r)
    for i in range(r):
        e = b[i][k]
        if e > 0:
            plus = plus * cluster[i] ** e
        elif e < 0:
            minus = minus * cluster[i] ** (-e)
    try:
        return (plus + minus) / cluster[k]
    except ExactDivisionError as exc:
        raise MutationError(
            f"exact division failed mutating index {k}; "
            "Laurent phenomenon violated"
        ) from exc


def mutate_cluster(seed: Seed, k: int) -> Seed:
    """Seed mutation: replace variable k by its exchange value, mutate the
    matrix, leave everything else untouched."""
    if not 0 <= k < seed.rank:
        raise DomainError(f"mutation index {k} out of range for rank {seed.rank}")
    new_var = exchange_value(seed.cluster, seed.matrix, k)
    cluster = seed.cluster[:k] + (new_var,) + seed.cluster[k + 1 :]
    return Seed(cluster, mutate_matrix(seed.matrix, k))


def check_skew_symmetrizable(b) -> tuple[int, ...] | None:
    """Minimal positive integer diagonal D with D.B skew-symmetric, or None.

    The symmetrizer is minimal per connected component of the underlying
    diagram (isolated vertices get 1).
    """
    mat = as_matrix(b)
    n = len(mat)
    for i in range(n):
        if mat[i][i] != 0:
            return None
        for j in range(n):
            if mat[i][j] * mat[j][i] > 0 or (mat[i][j] == 0) != (mat[j][i] == 0):
                return None
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        component = [start]
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j in range(n):
                if mat[i][j] == 0 or j == i:
                    continue
                # d_i b_ij = -d_j b_ji
                required = d[i] * Fraction(abs(mat[i][j]), abs(mat[j][i]))
                if d[j] is None:
                    d[j] = required
                    component.append(j)
                    queue.append(j)
                elif d[j] != required:
                    return None
        denom_lcm = 1
        for i in component:
            denom_lcm = denom_lcm * d[i].denominator // gcd(denom_lcm, d[i].denominator)
        scaled = [d[i] * denom_lcm for i in component]
        g = 0
        for v in scaled:
            g = gcd(g, int(v))
        for i, v in zip(component, scaled):
            d[i] = Fraction(int(v) // g)
    return tuple(int(v) for v in d)


# -- canonical forms -------------------------------------------------------

def seed_canonical_key(seed: Seed, mode: str = "exact") -> tuple:
    """Hashable canonical identity of a seed.

    exact: cluster order and matrix as-is.  permutation: lexicographic
    minimum over all simultaneous permutations of cluster entries and
    matrix rows/columns.
    """
    if mode == "exact":
        return (tuple(v.sort_key() for v in seed.cluster), seed.matrix)
    if mode in ("permutation", "perm"):
        r = seed.rank
        best = None
        var_keys = [v.sort_key() for v in seed.cluster]
        for perm in itertools.permutations(range(r)):
            mat = tuple(
                tuple(seed.matrix[perm[i]][perm[j]] for j in range(r)) for i in range(r)
            )
            cand = (tuple(var_keys[perm[i]] for i in range(r)), mat)
            if best is None or cand < best:
                best = cand
        return best
    raise DomainError(f"unknown equivalence mode {mode!r}")


def matrix_canonical_key(b: Matrix, mode: str = "exact") -> tuple:
    if mode == "exact":
        return b
    if mode in ("permutation", "perm"):
        r = len(b)
        return min(
            tuple(tuple(b[p[i]][p[j]] for j in range(r)) for i in range(r))
            for p in itertools.permutations(range(r))
        )
    raise DomainError(f"unknown equivalence mode {mode!r}")


def canonical_form(seed: Seed, mode: str = "exact") -> bytes:
    """Deterministic byte serialization of the canonical identity."""
    return repr(seed_canonical_key(seed, mode)).encode()


# -- built-in catalogue ----------------------------------------------------

def _bipartite_tree_matrix(r: int, edges: list[tuple[int, int, int, int]]) -> Matrix:
    """Orient a weighted tree so every node is a source or a sink.

    ``edges`` holds (i, j, w_ij, w_ji): the unsigned weights each side of
    the edge carries.  Nodes in the same part as node 0 become sources.
    """
    adj = {i: [] for i in range(r)}
    for i, j, _, _ in edges:
        adj[i].append(j)
        adj[j].append(i)
    part = {0: 0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in part:
                part[v] = 1 - part[u]
                queue.append(v)
    b = [[0] * r for _ in range(r)]
    for i, j, wij, wji in edges:
        src_is_i = part[i] == 0
        if src_is_i:
            b[i][j] = wij
            b[j][i] = -wji
        else:
            b[i][j] = -wij
            b[j][i] = wji
    return as_matrix(b)


def _path_edges(r: int, last: tuple[int, int] | None = None):
    edges = [(i, i + 1, 1, 1) for i in range(r - 1)]
    if last is not None:
        wij, wji = last
        edges[-1] = (r - 2, r - 1, wij, wji)
    return edges


def _builtin_matrix(name: str) -> Matrix:
    if name == "A13":
        # affine 4-cycle: 3-path 0->1->2->3 plus the arrow 0->3
        return as_matrix(
            [[0, 1, 0, 1], [-1, 0, 1, 0], [0, -1, 0, 1], [-1, 0, -1, 0]]
        )
    if name == "A22":
        # affine 4-cycle, alternating orientation: sources 0,2 and sinks 1,3
        return as_matrix(
            [[0, 1, 0, 1], [-1, 0, -1, 0], [0, 1, 0, 1], [-1, 0, -1, 0]]
        )
    series, rank = name[0], name[1:]
    if series in "ABCD" and rank.isdigit():
        r = int(rank)
        if series == "A" and r >= 2:
            return _bipartite_tree_matrix(r, _path_edges(r))
        if series == "B" and r >= 2:
            return _bipartite_tree_matrix(r, _path_edges(r, last=(1, 2)))
        if series == "C" and r >= 2:
            return _bipartite_tree_matrix(r, _path_edges(r, last=(2, 1)))
        if series == "D" and r >= 3:
            edges = [(i, i + 1, 1, 1) for i in range(r - 2)]
            edges.append((r - 3, r - 1, 1, 1))
            return _bipartite_tree_matrix(r, edges)
    if name == "F4":
        return _bipartite_tree_matrix(
            4, [(0, 1, 1, 1), (1, 2, 1, 2), (2, 3, 1, 1)]
        )
    if name == "G2":
        return as_matrix([[0, 1], [-3, 0]])
    if name == "I1":
        return as_matrix(
            [[0, 2, 0, 0], [-2, 0, 1, 0], [0, -1, 0, 1], [0, 0, -1, 0]]
        )
    if name == "I2":
        return as_matrix(
            [[0, 2, 0, -2], [-2, 0, 2, 0], [0, -2, 0, 1], [2, 0, -1, 0]]
        )
    raise DomainError(f"unknown builtin seed {name!r}")


BUILTIN_NAMES = (
    "A2", "A3", "A4", "A5",
    "B2", "B3", "B4", "B5",
    "C2", "C3", "C4", "C5",
    "D3", "D4", "D5",
    "F4", "G2", "A13", "A22", "I1", "I2",
)


def builtin_seed(name: str) -> Seed:
    if name not in BUILTIN_NAMES:
        raise DomainError(f"unknown builtin seed {name!r}")
    return initial_seed(_builtin_matrix(name))


# -- type classification ---------------------------------------------------

def _max_offdiag_product(b: Matrix) -> int:
    n = len(b)
    return max(
        (abs(b[i][j] * b[j][i]) for i in range(n) for j in range(i + 1, n)),
        default=0,
    )


def classify_type(seed: Seed, quiver_cap: int = 20000) -> str:
    """Capped enumeration of mutation-reachable exchange matrices.

    Returns one of finite / finite_mutation / infinite / unknown.
    """
    if quiver_cap <= 0:
        raise DomainError("quiver_cap must be positive")
    r = seed.rank
    start = seed.matrix
    seen = {start}
    queue = deque([start])
    worst = _max_offdiag_product(start)
    if worst >= 5:
        return "infinite"
    while queue:
        b = queue.popleft()
        for k in range(r):
            nb = mutate_matrix(b, k)
            if nb in seen:
                continue
            prod = _max_offdiag_product(nb)
            if prod >= 5:
                return "infinite"
            worst = max(worst, prod)
            if len(seen) >= quiver_cap:
                return "unknown"
            seen.add(nb)
            queue.append(nb)
    return "finite" if worst <= 3 else "finite_mutation"
