from .encoding import (
    variable_blocks,
    encode_seed,
    encode_corpus,
    decode_vector,
    dense_tensors,
    dense_sparsity,
    sparsity,
)
from .network import Mlp, TrainConfig, train_mlp
from .metrics import accuracy, mcc, confusion_matrix
from .data import assemble_dataset, cross_validate, generate_fake, CvReport

__all__ = [
    "variable_blocks",
    "encode_seed",
    "encode_corpus",
    "decode_vector",
    "dense_tensors",
    "dense_sparsity",
    "sparsity",
    "Mlp",
    "TrainConfig",
    "train_mlp",
    "accuracy",
    "mcc",
    "confusion_matrix",
    "assemble_dataset",
    "cross_validate",
    "generate_fake",
    "CvReport",
]
