"""Classification metrics: accuracy, Matthews correlation, confusion."""

from __future__ import annotations

import math

import numpy as np

from ..errors import DimensionMismatchError


def _check(preds, labels):
    preds = np.asarray(preds)
    labels = np.asarray(labels)
    if preds.shape != labels.shape:
        raise DimensionMismatchError(
            f"prediction/label shapes differ: {preds.shape} vs {labels.shape}"
        )
    return preds, labels


def accuracy(preds, labels) -> float:
    preds, labels = _check(preds, labels)
    return float(np.mean(preds == labels))


def mcc(preds, labels) -> float:
    """Matthews correlation; the multiclass R_K form, which reduces to the
    usual binary formula for two classes.  0 when the denominator is 0."""
    preds, labels = _check(preds, labels)
    classes = sorted(set(labels.tolist()) | set(preds.tolist()))
    k = len(classes)
    index = {c: i for i, c in enumerate(classes)}
    cm = np.zeros((k, k), dtype=np.int64)
    for t, p in zip(labels.tolist(), preds.tolist()):
        cm[index[t], index[p]] += 1
    s = cm.sum()
    c = np.trace(cm)
    t_k = cm.sum(axis=1)     # true occurrences per class
    p_k = cm.sum(axis=0)     # predicted occurrences per class
    num = c * s - int(t_k @ p_k)
    d1 = s * s - int(p_k @ p_k)
    d2 = s * s - int(t_k @ t_k)
    if d1 <= 0 or d2 <= 0:
        return 0.0
    return float(num / math.sqrt(d1) / math.sqrt(d2))


def confusion_matrix(preds, labels, n_classes: int, normalize: bool = True) -> np.ndarray:
    """Rows = true class, columns = predicted class.  Normalized to
    total-proportion form (entries sum to 1) when requested."""
    preds, labels = _check(preds, labels)
    cm = np.zeros((n_classes, n_classes), dtype=np.float64)
    for t, p in zip(labels.tolist(), preds.tolist()):
        cm[t, p] += 1
    if normalize and cm.sum():
        cm /= cm.sum()
    return cm
