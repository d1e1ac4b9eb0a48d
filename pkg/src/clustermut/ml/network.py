"""Feed-forward classifier: input -> 256 -> 256 -> 256 -> output, ReLU
hidden activations, sigmoid or softmax head, Adam with L2 penalty.

Plain numpy; the input matrix may be a scipy.sparse CSR matrix, in which
case only the first-layer products use it (hidden activations are dense).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp
from scipy.special import expit

from ..errors import ConvergenceError, DomainError

HIDDEN = (256, 256, 256)


@dataclass
class TrainConfig:
    epochs: int = 200
    batch_size: int | None = None      # None -> min(200, n)
    learning_rate: float = 1e-3
    beta1: float = 0.9
    beta2: float = 0.999
    eps: float = 1e-8
    l2: float = 1e-4
    dtype: type = np.float64


def _matmul(x, w):
    # sparse @ dense works transparently; keep result a dense ndarray
    out = x @ w
    return np.asarray(out)


class Mlp:
    def __init__(self, n_inputs: int, n_outputs: int, rng: np.random.Generator,
                 dtype=np.float64):
        self.n_outputs = n_outputs
        self.dtype = dtype
        sizes = [n_inputs, *HIDDEN, n_outputs]
        self.weights = []
        self.biases = []
        for fan_in, fan_out in zip(sizes, sizes[1:]):
            limit = np.sqrt(6.0 / (fan_in + fan_out))
            w = rng.uniform(-limit, limit, size=(fan_in, fan_out)).astype(dtype)
            self.weights.append(w)
            self.biases.append(np.zeros(fan_out, dtype=dtype))
        self._adam_m = [np.zeros_like(w) for w in self.weights] + [
            np.zeros_like(b) for b in self.biases
        ]
        self._adam_v = [np.zeros_like(w) for w in self.weights] + [
            np.zeros_like(b) for b in self.biases
        ]
        self._adam_t = 0

    # -- forward ------------------------------------------------------

    def _forward(self, x):
        """Returns (activations per layer, pre-head output)."""
        acts = [x]
        h = x
        for i, (w, b) in enumerate(zip(self.weights, self.biases)):
            z = _matmul(h, w) + b
            if i < len(self.weights) - 1:
                h = np.maximum(z, 0.0)
            else:
                h = z
            acts.append(h)
        return acts

    def predict_proba(self, x) -> np.ndarray:
        z = self._forward(x)[-1]
        if self.n_outputs == 1:
            return expit(z[:, 0])
        z = z - z.max(axis=1, keepdims=True)
        e = np.exp(z)
        return e / e.sum(axis=1, keepdims=True)

    def predict(self, x) -> np.ndarray:
        p = self.predict_proba(x)
        if self.n_outputs == 1:
            return (p >= 0.5).astype(np.int64)
        return p.argmax(axis=1)

    def loss(self, x, y) -> float:
        """Mean cross-entropy (no penalty term)."""
        p = self.predict_proba(x)
        eps = 1e-12
        if self.n_outputs == 1:
            p = np.clip(p, eps, 1 - eps)
            return float(-np.mean(y * np.log(p) + (1 - y) * np.log(1 - p)))
        p = np.clip(p, eps, 1.0)
        return float(-np.mean(np.log(p[np.arange(len(y)), y])))

    # -- backward -----------------------------------------------------

    def gradients(self, x, y, l2: float = 0.0):
        """Cross-entropy gradients for a batch; same layout as parameters()."""
        n = x.shape[0]
        acts = self._forward(x)
        z_out = acts[-1]
        if self.n_outputs == 1:
            p = expit(z_out[:, 0])
            delta = (p - y)[:, None] / n
        else:
            z = z_out - z_out.max(axis=1, keepdims=True)
            e = np.exp(z)
            p = e / e.sum(axis=1, keepdims=True)
            delta = p.copy()
            delta[np.arange(n), y] -= 1.0
            delta /= n
        delta = delta.astype(self.dtype)
        grads_w = [None] * len(self.weights)
        grads_b = [None] * len(self.biases)
        for i in range(len(self.weights) - 1, -1, -1):
            a_prev = acts[i]
            if sp.issparse(a_prev):
                gw = np.asarray((a_prev.T @ delta))
            else:
                gw = a_prev.T @ delta
            grads_w[i] = gw + l2 * self.weights[i]
            grads_b[i] = delta.sum(axis=0)
            if i > 0:
                delta = (delta @ self.weights[i].T) * (acts[i] > 0)
        return grads_w + grads_b

    def parameters(self):
        return self.weights + self.biases

    def get_flat(self) -> np.ndarray:
        return np.concatenate([p.ravel() for p in self.parameters()])

    def set_flat(self, flat: np.ndarray) -> None:
        pos = 0
        for p in self.parameters():
            p[...] = flat[pos : pos + p.size].reshape(p.shape)
            pos += p.size

    def adam_step(self, grads, cfg: TrainConfig) -> None:
        self._adam_t += 1
        t = self._adam_t
        for p, g, m, v in zip(self.parameters(), grads, self._adam_m, self._adam_v):
            m *= cfg.beta1
            m += (1 - cfg.beta1) * g
            v *= cfg.beta2
            v += (1 - cfg.beta2) * (g * g)
            mhat = m / (1 - cfg.beta1**t)
            vhat = v / (1 - cfg.beta2**t)
            p -= cfg.learning_rate * mhat / (np.sqrt(vhat) + cfg.eps)


def train_mlp(x, y, n_classes: int, rng: np.random.Generator,
              cfg: TrainConfig | None = None) -> Mlp:
    cfg = cfg or TrainConfig()
    n = x.shape[0]
    if n != len(y):
        raise DomainError("row count and label count differ")
    y = np.asarray(y)
    n_outputs = 1 if n_classes == 2 else n_classes
    if cfg.dtype != np.float64 and not sp.issparse(x):
        x = np.asarray(x, dtype=cfg.dtype)
    model = Mlp(x.shape[1], n_outputs, rng, dtype=cfg.dtype)
    y_t = y.astype(cfg.dtype) if n_outputs == 1 else y
    batch = cfg.batch_size or min(200, n)
    for _ in range(cfg.epochs):
        order = rng.permutation(n)
        for start in range(0, n, batch):
            idx = order[start : start + batch]
            xb = x[idx]
            grads = model.gradients(xb, y_t[idx], l2=cfg.l2)
            if not all(np.all(np.isfinite(g)) for g in grads):
                raise ConvergenceError("non-finite gradient during training")
            model.adam_step(grads, cfg)
    return model
