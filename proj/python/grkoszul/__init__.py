"""Koszulity checks for finite-dimensional quiver algebras and affine KL data."""

from ._grkoszul import (
    Error,
    HypothesisError,
    InputError,
    __version__,
    kl_table,
    koszul_check,
    lcf_dimension,
    predict_layers,
    run,
    selftest,
)

__all__ = [
    "Error",
    "HypothesisError",
    "InputError",
    "__version__",
    "kl_table",
    "koszul_check",
    "lcf_dimension",
    "predict_layers",
    "run",
    "selftest",
]
