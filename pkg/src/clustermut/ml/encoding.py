"""Seed-to-vector encodings for the classifiers.

Sparse layout: each cluster variable becomes a run of 5-blocks
[c, e1, .., er] — its numerator monomials in descending graded-lex order —
followed by one denominator block [1, e1, .., er].  Variables are padded
with zero blocks to a common per-variable block count, concatenated in
cluster order, and the flattened exchange matrix is optionally appended.
"""

from __future__ import annotations

import numpy as np

from ..errors import DomainError
from ..laurent import LaurentValue, Polynomial, laurent_normalize
from ..mutation import Seed, as_matrix


def variable_blocks(value: LaurentValue, rank: int) -> list[list[int]]:
    """Numerator 5-blocks in descending graded-lex order plus the
    denominator block."""
    blocks = []
    for exps, coeff in value.num.terms_sorted():
        blocks.append([coeff, *exps])
    blocks.append([1, *value.den_exponents()])
    return blocks


def encode_seed(seed: Seed, include_matrix: bool = True, pad_blocks: int | None = None) -> list[int]:
    """Flat integer vector for one seed.  When pad_blocks is given, every
    variable's run is zero-padded to that many 5-blocks."""
    r = seed.rank
    out: list[int] = []
    for value in seed.cluster:
        blocks = variable_blocks(value, r)
        if pad_blocks is not None:
            if len(blocks) > pad_blocks:
                raise DomainError(
                    f"variable needs {len(blocks)} blocks, pad is {pad_blocks}"
                )
            blocks = blocks + [[0] * (r + 1)] * (pad_blocks - len(blocks))
        for block in blocks:
            out.extend(block)
    if include_matrix:
        for row in seed.matrix:
            out.extend(row)
    return out


def max_variable_blocks(seeds) -> int:
    """Largest per-variable block count across a corpus."""
    best = 0
    for seed in seeds:
        for value in seed.cluster:
            best = max(best, len(value.num) + 1)
    return best


def encode_corpus(
    seeds, include_matrix: bool = True, pad_blocks: int | None = None
) -> tuple[np.ndarray, int]:
    """(matrix of padded row vectors, per-variable block count used)."""
    seeds = list(seeds)
    if not seeds:
        raise DomainError("empty corpus")
    if pad_blocks is None:
        pad_blocks = max_variable_blocks(seeds)
    rows = [encode_seed(s, include_matrix, pad_blocks) for s in seeds]
    return np.array(rows, dtype=np.int64), pad_blocks


def decode_vector(
    vector, rank: int, pad_blocks: int, include_matrix: bool = True
) -> Seed:
    """Invert encode_seed.  Zero blocks are padding; the last non-zero
    block of each variable's run is its denominator."""
    vec = [int(x) for x in vector]
    width = rank + 1
    var_len = pad_blocks * width
    expect = rank * var_len + (rank * rank if include_matrix else 0)
    if len(vec) != expect:
        raise DomainError(f"vector length {len(vec)}, expected {expect}")
    cluster = []
    for i in range(rank):
        run = vec[i * var_len : (i + 1) * var_len]
        blocks = [run[j * width : (j + 1) * width] for j in range(pad_blocks)]
        while blocks and not any(blocks[-1]):
            blocks.pop()
        if len(blocks) < 2:
            raise DomainError("variable run has no denominator block")
        den_block = blocks.pop()
        if den_block[0] != 1:
            raise DomainError("denominator block must have coefficient 1")
        terms = {tuple(b[1:]): b[0] for b in blocks}
        cluster.append(
            laurent_normalize(Polynomial.from_terms(rank, terms), tuple(den_block[1:]))
        )
    if include_matrix:
        tail = vec[rank * var_len :]
        matrix = as_matrix(
            [tail[i * rank : (i + 1) * rank] for i in range(rank)]
        )
    else:
        raise DomainError("cannot decode a seed without its matrix block")
    return Seed(tuple(cluster), matrix)


def dense_tensors(value: LaurentValue, rank: int, size: int) -> tuple[np.ndarray, np.ndarray]:
    """Coefficient-indexed numerator and denominator tensors of shape
    (size,)*rank."""
    num = np.zeros((size,) * rank, dtype=np.int64)
    for exps, coeff in value.num.terms_sorted():
        num[exps] = coeff
    den = np.zeros((size,) * rank, dtype=np.int64)
    den[value.den_exponents()] = 1
    return num, den


def dense_sparsity(seeds) -> float:
    """Proportion of non-zero entries in the dense-tensor corpus, sized by
    the corpus-wide maximum exponent."""
    seeds = list(seeds)
    rank = seeds[0].rank
    size = 1
    for seed in seeds:
        for value in seed.cluster:
            for exps, _ in value.num.terms_sorted():
                size = max(size, max(exps) + 1)
            size = max(size, max(value.den_exponents()) + 1)
    nonzero = 0
    for seed in seeds:
        for value in seed.cluster:
            nonzero += len(value.num) + 1
    total = len(seeds) * rank * 2 * size**rank
    return nonzero / total


def sparsity(matrix: np.ndarray) -> float:
    """Proportion of non-zero entries of an assembled corpus matrix."""
    return float(np.count_nonzero(matrix)) / matrix.size
