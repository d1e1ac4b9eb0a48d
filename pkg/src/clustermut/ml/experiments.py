"""The four classifier studies: binary pairs, multiclass finite types,
depth sweep, and fake-vs-true discrimination."""

from __future__ import annotations

import csv
import json
import os
import zlib
from dataclasses import dataclass

import numpy as np

from ..errors import DomainError
from ..exchange_graph import generate_full, generate_seed_eg
from ..mutation import builtin_seed
from .data import AssembledData, assemble_dataset, cross_validate, generate_fake, CvReport
from .encoding import sparsity
from .network import TrainConfig

BINARY_PAIRS = [
    ("A4", "D4"),
    ("A4", "A13"),
    ("F4", "I1"),
    ("A13", "A22"),
    ("A13", "I1"),
    ("I1", "I2"),
]
FINITE_FULL = ["A4", "B4", "C4", "D4", "F4"]
FAKE_ALGEBRAS = ["A4", "D4", "F4", "A13", "A22", "I1", "I2"]

_corpus_cache: dict = {}


def depth4_seeds(name: str):
    key = ("d4", name)
    if key not in _corpus_cache:
        graph = generate_seed_eg(builtin_seed(name), 4, "exact", name)
        _corpus_cache[key] = graph.payloads
    return _corpus_cache[key]


def full_graph(name: str):
    key = ("full", name)
    if key not in _corpus_cache:
        _corpus_cache[key] = generate_full(builtin_seed(name), algebra=name)
    return _corpus_cache[key]


@dataclass
class ExperimentRow:
    name: str
    class_sizes: list[int]
    length: int
    sparsity: float
    include_matrix: bool
    report: CvReport

    def to_record(self) -> dict:
        return {
            "name": self.name,
            "class_sizes": self.class_sizes,
            "length": self.length,
            "sparsity": round(self.sparsity, 3),
            "include_matrix": self.include_matrix,
            "accuracy_mean": self.report.accuracy_mean,
            "accuracy_se": self.report.accuracy_se,
            "mcc_mean": self.report.mcc_mean,
            "mcc_se": self.report.mcc_se,
            "confusion": self.report.confusion.tolist(),
        }


def run_binary_pairs(rng_seed: int = 0, pairs=None, cfg: TrainConfig | None = None,
                     with_and_without_matrix: bool = True) -> list[ExperimentRow]:
    rows = []
    variants = (True, False) if with_and_without_matrix else (True,)
    for a, b in pairs or BINARY_PAIRS:
        for include_matrix in variants:
            rng = np.random.default_rng(
                [rng_seed, zlib.crc32(f"{a}:{b}".encode()) & 0xFFFF, include_matrix]
            )
            data = assemble_dataset(
                [depth4_seeds(a), depth4_seeds(b)], include_matrix, rng
            )
            report = cross_validate(data.x, data.y, 2, rng, cfg)
            rows.append(ExperimentRow(
                name=f"{a} vs {b}",
                class_sizes=data.class_sizes,
                length=data.length,
                sparsity=sparsity(data.x),
                include_matrix=include_matrix,
                report=report,
            ))
    return rows


def run_multiclass_finite(rng_seed: int = 0, cfg: TrainConfig | None = None) -> ExperimentRow:
    rng = np.random.default_rng([rng_seed, 5])
    corpora = [full_graph(name).payloads for name in FINITE_FULL]
    data = assemble_dataset(corpora, include_matrix=True, rng=rng)
    report = cross_validate(data.x, data.y, len(FINITE_FULL), rng, cfg)
    return ExperimentRow(
        name="multiclass " + "/".join(FINITE_FULL),
        class_sizes=data.class_sizes,
        length=data.length,
        sparsity=sparsity(data.x),
        include_matrix=True,
        report=report,
    )


def depth_sweep_corpora(max_depth: int = 13):
    """Cumulative A4/D4 seed lists per depth 1..max_depth."""
    ga, gd = full_graph("A4"), full_graph("D4")
    out = []
    for depth in range(1, max_depth + 1):
        a = [s for s, d in zip(ga.payloads, ga.depths) if d <= depth]
        b = [s for s, d in zip(gd.payloads, gd.depths) if d <= depth]
        out.append((depth, a, b))
    return out


def run_depth_sweep(rng_seed: int = 0, max_depth: int = 13,
                    include_matrix: bool = True,
                    cfg: TrainConfig | None = None) -> list[ExperimentRow]:
    rows = []
    for depth, a, b in depth_sweep_corpora(max_depth):
        rng = np.random.default_rng([rng_seed, 9, depth])
        data = assemble_dataset([a, b], include_matrix, rng)
        report = cross_validate(data.x, data.y, 2, rng, cfg)
        rows.append(ExperimentRow(
            name=f"A4 vs D4 depth {depth}",
            class_sizes=data.class_sizes,
            length=data.length,
            sparsity=sparsity(data.x),
            include_matrix=include_matrix,
            report=report,
        ))
    return rows


def run_fake_vs_true(rng_seed: int = 0, algebras=None,
                     cfg: TrainConfig | None = None) -> list[ExperimentRow]:
    rows = []
    for name in algebras or FAKE_ALGEBRAS:
        rng = np.random.default_rng([rng_seed, 7, zlib.crc32(name.encode()) & 0xFFFF])
        data = assemble_dataset([depth4_seeds(name)], include_matrix=True)
        fakes = generate_fake(data.x, rng)
        x = np.vstack([data.x, fakes])
        y = np.concatenate([np.ones(len(data.x), dtype=np.int64),
                            np.zeros(len(fakes), dtype=np.int64)])
        order = rng.permutation(len(y))
        x, y = x[order], y[order]
        report = cross_validate(x, y, 2, rng, cfg)
        rows.append(ExperimentRow(
            name=f"{name} true vs fake",
            class_sizes=[len(data.x), len(fakes)],
            length=data.length,
            sparsity=sparsity(x),
            include_matrix=True,
            report=report,
        ))
    return rows


EXPERIMENTS = {
    "binary-pairs": run_binary_pairs,
    "multiclass-finite": run_multiclass_finite,
    "depth-sweep": run_depth_sweep,
    "fake-vs-true": run_fake_vs_true,
}


def run_experiment(name: str, rng_seed: int = 0, **kwargs):
    if name not in EXPERIMENTS:
        raise DomainError(f"unknown experiment {name!r}")
    return EXPERIMENTS[name](rng_seed=rng_seed, **kwargs)


def write_reports(rows, out_dir: str, stem: str, rng_seed: int) -> None:
    """CSV of per-fold metrics plus a JSON with confusion matrices."""
    os.makedirs(out_dir, exist_ok=True)
    if isinstance(rows, ExperimentRow):
        rows = [rows]
    csv_path = os.path.join(out_dir, f"{stem}.csv")
    with open(csv_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow([
            "name", "class_sizes", "length", "sparsity", "include_matrix",
            "accuracy_mean", "accuracy_se", "mcc_mean", "mcc_se",
            "fold_accuracies", "fold_mccs", "rng_seed",
        ])
        for row in rows:
            writer.writerow([
                row.name, "/".join(map(str, row.class_sizes)), row.length,
                f"{row.sparsity:.3f}", int(row.include_matrix),
                f"{row.report.accuracy_mean:.3f}", f"{row.report.accuracy_se:.3f}",
                f"{row.report.mcc_mean:.3f}", f"{row.report.mcc_se:.3f}",
                ";".join(f"{a:.4f}" for a in row.report.fold_accuracy),
                ";".join(f"{m:.4f}" for m in row.report.fold_mcc),
                rng_seed,
            ])
    json_path = os.path.join(out_dir, f"{stem}.json")
    with open(json_path, "w") as fh:
        json.dump({"rng_seed": rng_seed,
                   "rows": [r.to_record() for r in rows]}, fh, indent=1)
