"""Empirical moment tensors of periodic processes.

A period-n process is represented by realizations of one period
(x_1, ..., x_n); the order-m moment tensor averages the index products
x_{i_1}...x_{i_m} over realizations.  It is symmetric by construction and
circulant exactly when the underlying process is shift-stationary (checked,
not enforced).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import DenseTensor, Tensor, matrix_product


@dataclass(frozen=True)
class ProcessSample:
    """Realizations of a period-n process, one row per trajectory."""

    values: np.ndarray  # shape (trajectories, period)

    def __post_init__(self):
        arr = np.asarray(self.values, dtype=float)
        if arr.ndim != 2 or arr.shape[0] < 1:
            raise ValueError("need a (trajectories, period) array")
        object.__setattr__(self, "values", arr)

    @property
    def period(self) -> int:
        return self.values.shape[1]


def fold_trajectories(raw, period: int) -> ProcessSample:
    """Truncate raw trajectories (length >= period) to one period each."""
    rows = []
    for t in raw:
        t = np.asarray(t, dtype=float)
        if len(t) < period:
            raise ValueError(f"trajectory shorter than period {period}")
        rows.append(t[:period])
    return ProcessSample(np.array(rows))


def moment_tensor(sample: ProcessSample, m: int) -> DenseTensor:
    """Entrywise sample means of x_{i_1}...x_{i_m}; symmetric by construction."""
    if m < 2:
        raise ValueError("moment order must be >= 2")
    x = sample.values
    letters = "ijklpqrs"[:m]
    subs = ",".join("t" + c for c in letters) + "->" + letters
    acc = np.einsum(subs, *([x] * m)) / x.shape[0]
    return DenseTensor(acc)


def moment_pushforward(moment: Tensor, b: np.ndarray) -> DenseTensor:
    """Moment tensor of y = B^T x, i.e. the mode-uniform product with B."""
    return matrix_product(moment, np.asarray(b, dtype=float))
