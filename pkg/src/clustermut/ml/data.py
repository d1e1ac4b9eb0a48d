"""Dataset assembly, cross-validation, and fake-vector generation."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp

from ..errors import DomainError
from .encoding import encode_corpus, max_variable_blocks
from .metrics import accuracy, confusion_matrix, mcc
from .network import TrainConfig, train_mlp

SPARSE_THRESHOLD = 5000   # switch first-layer input to CSR beyond this width


@dataclass
class AssembledData:
    x: np.ndarray            # (n, length) int64
    y: np.ndarray            # (n,) int64
    length: int
    pad_blocks: int
    class_sizes: list[int]


def assemble_dataset(corpora, include_matrix: bool = True,
                     rng: np.random.Generator | None = None) -> AssembledData:
    """Pad and stack per-class seed corpora into one shuffled matrix.

    corpora: list of seed lists, one per class, label = list position.
    Per-variable padding is computed over the whole investigation.
    """
    corpora = [list(c) for c in corpora]
    if any(not c for c in corpora):
        raise DomainError("empty class in dataset")
    pad = max(max_variable_blocks(c) for c in corpora)
    parts = []
    labels = []
    for label, seeds in enumerate(corpora):
        x, _ = encode_corpus(seeds, include_matrix, pad_blocks=pad)
        parts.append(x)
        labels.append(np.full(len(seeds), label, dtype=np.int64))
    x = np.vstack(parts)
    y = np.concatenate(labels)
    if rng is not None:
        order = rng.permutation(len(y))
        x, y = x[order], y[order]
    return AssembledData(
        x=x, y=y, length=x.shape[1], pad_blocks=pad,
        class_sizes=[len(c) for c in corpora],
    )


def kfold_indices(n: int, folds: int, rng: np.random.Generator) -> list[np.ndarray]:
    """Disjoint covering folds in shuffled order."""
    if n < folds:
        raise DomainError(f"{n} samples cannot fill {folds} folds")
    order = rng.permutation(n)
    return [order[i::folds] for i in range(folds)]


@dataclass
class CvReport:
    fold_accuracy: list[float]
    fold_mcc: list[float]
    confusion: np.ndarray      # mean, total-proportion form
    n_classes: int

    @property
    def accuracy_mean(self) -> float:
        return float(np.mean(self.fold_accuracy))

    @property
    def accuracy_se(self) -> float:
        return float(np.std(self.fold_accuracy, ddof=1) / np.sqrt(len(self.fold_accuracy)))

    @property
    def mcc_mean(self) -> float:
        return float(np.mean(self.fold_mcc))

    @property
    def mcc_se(self) -> float:
        return float(np.std(self.fold_mcc, ddof=1) / np.sqrt(len(self.fold_mcc)))


def _as_train_input(x: np.ndarray, dtype):
    if x.shape[1] >= SPARSE_THRESHOLD:
        return sp.csr_matrix(x.astype(dtype))
    return x.astype(dtype)


def cross_validate(x: np.ndarray, y: np.ndarray, n_classes: int,
                   rng: np.random.Generator, cfg: TrainConfig | None = None,
                   folds: int = 5) -> CvReport:
    cfg = cfg or TrainConfig()
    if x.shape[1] >= SPARSE_THRESHOLD and cfg.dtype == np.float64:
        cfg = TrainConfig(**{**cfg.__dict__, "dtype": np.float32})
    xin = _as_train_input(x, cfg.dtype)
    fold_idx = kfold_indices(len(y), folds, rng)
    accs, mccs, cms = [], [], []
    for i in range(folds):
        test = fold_idx[i]
        train = np.concatenate([fold_idx[j] for j in range(folds) if j != i])
        model = train_mlp(xin[train], y[train], n_classes, rng, cfg)
        preds = model.predict(xin[test])
        accs.append(accuracy(preds, y[test]))
        mccs.append(mcc(preds, y[test]))
        cms.append(confusion_matrix(preds, y[test], n_classes))
    return CvReport(
        fold_accuracy=accs,
        fold_mcc=mccs,
        confusion=np.mean(cms, axis=0),
        n_classes=n_classes,
    )


def generate_fake(true_x: np.ndarray, rng: np.random.Generator,
                  max_retries: int = 1000) -> np.ndarray:
    """Fake vectors mimicking a true corpus: every entry drawn i.i.d. from
    the corpus-wide empirical distribution of entry values (zeros and all),
    one fake per true vector, resampling any row that collides with a true
    vector or an earlier fake."""
    if true_x.size == 0:
        raise DomainError("empty corpus")
    values, counts = np.unique(true_x, return_counts=True)
    probs = counts / counts.sum()
    taken = {row.tobytes() for row in true_x}
    n, length = true_x.shape
    out = np.empty_like(true_x)
    for i in range(n):
        for _ in range(max_retries):
            row = rng.choice(values, size=length, p=probs)
            key = row.tobytes()
            if key not in taken:
                taken.add(key)
                out[i] = row
                break
        else:
            raise DomainError("could not sample a non-colliding fake vector")
    return out
