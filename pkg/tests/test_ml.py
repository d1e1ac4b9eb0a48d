import numpy as np
import pytest
import scipy.sparse as sp
from hypothesis import given, settings, strategies as st

from clustermut.errors import DomainError
from clustermut.ml.data import cross_validate, generate_fake, kfold_indices
from clustermut.ml.encoding import (
    decode_vector,
    encode_corpus,
    encode_seed,
    max_variable_blocks,
    sparsity,
)
from clustermut.ml.metrics import accuracy, confusion_matrix, mcc
from clustermut.ml.network import Mlp, TrainConfig, train_mlp
from clustermut.mutation import builtin_seed, mutate_cluster


# -- encoding --------------------------------------------------------------

@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["A3", "B3", "G2", "A13"]),
       st.lists(st.integers(0, 3), max_size=5))
def test_encode_decode_round_trip(name, path):
    seed = builtin_seed(name)
    for k in path:
        seed = mutate_cluster(seed, k % seed.rank)
    pad = max_variable_blocks([seed]) + 2
    vec = encode_seed(seed, include_matrix=True, pad_blocks=pad)
    back = decode_vector(np.array(vec), seed.rank, pad)
    assert tuple(back.cluster) == tuple(seed.cluster)
    assert back.matrix == seed.matrix


def test_decode_needs_matrix():
    seed = builtin_seed("A3")
    pad = max_variable_blocks([seed])
    vec = encode_seed(seed, include_matrix=False, pad_blocks=pad)
    with pytest.raises(DomainError):
        decode_vector(np.array(vec), 3, pad, include_matrix=False)


def test_encode_corpus_shape_and_padding():
    seeds = [builtin_seed("A3")]
    for k in (0, 1, 2, 0):
        seeds.append(mutate_cluster(seeds[-1], k))
    matrix, pad = encode_corpus(seeds, include_matrix=True)
    assert matrix.shape == (5, len(encode_seed(seeds[0], True, pad)))
    assert pad == max_variable_blocks(seeds)
    # every row decodes to its seed
    for row, seed in zip(matrix, seeds):
        back = decode_vector(row, 3, pad)
        assert tuple(back.cluster) == tuple(seed.cluster)


def test_sparsity_counts_nonzeros():
    m = np.array([[0, 1, 0, 0], [2, 0, 0, 0]])
    assert sparsity(m) == pytest.approx(2 / 8)


# -- metrics ---------------------------------------------------------------

def test_accuracy_and_mcc_perfect():
    y = np.array([0, 1, 0, 1, 1])
    assert accuracy(y, y) == 1.0
    assert mcc(y, y) == pytest.approx(1.0)
    assert mcc(1 - y, y) == pytest.approx(-1.0)


def test_mcc_zero_for_constant_prediction():
    assert mcc(np.zeros(6, dtype=int), np.array([0, 0, 0, 1, 1, 1])) == 0.0


@settings(max_examples=200, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2)),
                min_size=2, max_size=40))
def test_mcc_matches_sklearn(pairs):
    from sklearn.metrics import matthews_corrcoef

    preds = np.array([p for p, _ in pairs])
    labels = np.array([l for _, l in pairs])
    assert mcc(preds, labels) == pytest.approx(
        matthews_corrcoef(labels, preds), abs=1e-10)


@settings(max_examples=100)
@given(st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2)),
                min_size=1, max_size=30))
def test_mcc_relabel_invariance(pairs):
    preds = np.array([p for p, _ in pairs])
    labels = np.array([l for _, l in pairs])
    relabel = np.array([2, 0, 1])
    assert mcc(relabel[preds], relabel[labels]) == pytest.approx(
        mcc(preds, labels), abs=1e-12)


def test_confusion_matrix_total_proportions():
    preds = np.array([0, 1, 1, 2, 2, 2])
    labels = np.array([0, 1, 0, 2, 2, 1])
    cm = confusion_matrix(preds, labels, 3)
    assert cm.sum() == pytest.approx(1.0)
    assert cm[0, 1] == pytest.approx(1 / 6)   # true 0 predicted 1
    raw = confusion_matrix(preds, labels, 3, normalize=False)
    assert raw.sum() == 6


# -- fold assignment -------------------------------------------------------

@settings(max_examples=300)
@given(st.integers(7, 400), st.integers(2, 7), st.integers(0, 2**32 - 1))
def test_kfold_disjoint_and_covering(n, folds, seed):
    rng = np.random.default_rng(seed)
    parts = kfold_indices(n, folds, rng)
    assert len(parts) == folds
    all_idx = np.concatenate(parts)
    assert sorted(all_idx) == list(range(n))
    sizes = [len(p) for p in parts]
    assert max(sizes) - min(sizes) <= 1


# -- network ---------------------------------------------------------------

@pytest.mark.parametrize("n_outputs", [1, 3])
def test_gradients_match_finite_differences(n_outputs):
    """Central differences agree with backpropagation.

    Freshly initialised biases are exactly zero, which parks dead-sample
    pre-activations exactly on the ReLU kink where finite differences are
    meaningless; perturbing every parameter moves them off it.  Sampled
    coordinates are restricted to gradients large enough that the check
    is not dominated by floating-point roundoff in the loss.
    """
    rng = np.random.default_rng(7)
    model = Mlp(6, n_outputs, rng)
    flat = model.get_flat()
    model.set_flat(flat + rng.normal(0.0, 0.05, size=flat.shape))
    x = rng.normal(size=(9, 6))
    y = rng.integers(0, n_outputs if n_outputs > 1 else 2, size=9)
    grads = model.gradients(x, y, l2=0.0)
    flat_grad = np.concatenate([g.ravel() for g in grads])
    flat = model.get_flat()
    candidates = np.flatnonzero(np.abs(flat_grad) > 1e-4)
    assert len(candidates) >= 300
    idx = rng.choice(candidates, size=300, replace=False)
    eps = 1e-6
    for i in idx:
        hi = flat.copy()
        hi[i] += eps
        lo = flat.copy()
        lo[i] -= eps
        model.set_flat(hi)
        f_hi = model.loss(x, y)
        model.set_flat(lo)
        f_lo = model.loss(x, y)
        model.set_flat(flat)
        numeric = (f_hi - f_lo) / (2 * eps)
        assert abs(numeric - flat_grad[i]) / max(abs(numeric), abs(flat_grad[i])) < 1e-5


def test_sparse_input_matches_dense():
    rng = np.random.default_rng(3)
    x = rng.normal(size=(12, 20))
    x[x < 0.5] = 0.0
    y = rng.integers(0, 2, size=12)
    model = Mlp(20, 1, rng)
    dense = model.gradients(x, y, l2=1e-4)
    sparse = model.gradients(sp.csr_matrix(x), y, l2=1e-4)
    for a, b in zip(dense, sparse):
        assert np.allclose(a, b)
    assert np.allclose(model.predict_proba(x), model.predict_proba(sp.csr_matrix(x)))


def test_training_learns_xor():
    rng = np.random.default_rng(0)
    base = np.array([[0, 0], [0, 1], [1, 0], [1, 1]], dtype=float)
    x = np.tile(base, (25, 1))
    y = np.tile(np.array([0, 1, 1, 0]), 25)
    model = train_mlp(x, y, 2, rng, TrainConfig(epochs=100))
    assert accuracy(model.predict(x), y) == 1.0


def test_training_is_deterministic():
    x = np.random.default_rng(5).normal(size=(30, 4))
    y = (x[:, 0] > 0).astype(int)
    models = [
        train_mlp(x, y, 2, np.random.default_rng(11), TrainConfig(epochs=5))
        for _ in range(2)
    ]
    assert np.array_equal(models[0].get_flat(), models[1].get_flat())


def test_cross_validate_separable_data():
    rng = np.random.default_rng(1)
    x = rng.normal(size=(100, 3))
    y = (x[:, 1] > 0).astype(int)
    x[:, 1] += 4.0 * y               # widen the margin
    report = cross_validate(x, y, 2, np.random.default_rng(2),
                            cfg=TrainConfig(epochs=40))
    assert len(report.fold_accuracy) == 5
    assert report.accuracy_mean > 0.9
    assert report.confusion.shape == (2, 2)


# -- synthetic data --------------------------------------------------------

def test_generate_fake_avoids_collisions():
    rng = np.random.default_rng(9)
    true = rng.integers(0, 3, size=(40, 12))
    fake = generate_fake(true, np.random.default_rng(10))
    assert fake.shape == true.shape
    true_rows = {row.tobytes() for row in true}
    fake_rows = [row.tobytes() for row in fake]
    assert not (set(fake_rows) & true_rows)
    assert len(set(fake_rows)) == len(fake_rows)
    # entries only use values present in the true corpus
    assert set(np.unique(fake)) <= set(np.unique(true))


def test_generate_fake_matches_value_distribution():
    rng = np.random.default_rng(4)
    true = rng.choice([0, 0, 0, 1, 5], size=(300, 20))
    fake = generate_fake(true, np.random.default_rng(8))
    for value in (0, 1, 5):
        p_true = (true == value).mean()
        p_fake = (fake == value).mean()
        assert abs(p_true - p_fake) < 0.05
