"""Dense and circulant tensor representations and multilinear algebra.

A circulant tensor of order m and dimension n is stored by its root tensor
(order m-1): every entry is obtained by cyclically shifting all indices so
the first one becomes 1.  All index tuples in the public API are 1-based.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass, field

import numpy as np

DEFAULT_BUDGET = 10**7


def materialization_budget(budget: int | None = None) -> int:
    """Entry-count cap for dense materialization (CTENSOR_BUDGET overrides)."""
    if budget is not None:
        return int(budget)
    env = os.environ.get("CTENSOR_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def _check_budget(n: int, order: int, budget: int | None) -> None:
    cap = materialization_budget(budget)
    if n**order > cap:
        raise ValueError(
            f"dense materialization of {n}^{order} entries exceeds budget {cap}"
        )


@dataclass(frozen=True)
class DenseTensor:
    """Explicit order-m, dimension-n multi-array, row-major, 1-based indices."""

    array: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.array, dtype=float)
        if arr.ndim < 1:
            raise ValueError("tensor order must be >= 1")
        n = arr.shape[0]
        if n < 2:
            raise ValueError("tensor dimension must be >= 2")
        if arr.shape != (n,) * arr.ndim:
            raise ValueError(f"all modes must have equal length, got {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("tensor entries must be finite")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "array", arr)

    @property
    def order(self) -> int:
        return self.array.ndim

    @property
    def dim(self) -> int:
        return self.array.shape[0]

    @property
    def entries(self) -> np.ndarray:
        """Row-major flattening."""
        return self.array.reshape(-1)

    def entry(self, idx) -> float:
        return float(self.array[_to0(idx, self.dim, self.order)])


@dataclass(frozen=True)
class CirculantTensor:
    """Order-m circulant tensor generated from its order-(m-1) root tensor."""

    root: DenseTensor
    order: int = field(init=False)
    dim: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "order", self.root.order + 1)
        object.__setattr__(self, "dim", self.root.dim)

    @property
    def diagonal_entry(self) -> float:
        """The common diagonal entry (first entry of the root)."""
        return float(self.root.array[(0,) * self.root.order])

    def entry(self, idx) -> float:
        return entry(self, idx)


Tensor = DenseTensor | CirculantTensor


def _to0(idx, n: int, order: int) -> tuple:
    idx = tuple(int(i) for i in idx)
    if len(idx) != order:
        raise ValueError(f"expected {order} indices, got {len(idx)}")
    for i in idx:
        if not 1 <= i <= n:
            raise ValueError(f"index {i} out of range [1, {n}]")
    return tuple(i - 1 for i in idx)


def circulant_from_root(root: DenseTensor | np.ndarray) -> CirculantTensor:
    """Circulant tensor whose first row tensor is ``root``."""
    if not isinstance(root, DenseTensor):
        root = DenseTensor(np.asarray(root, dtype=float))
    return CirculantTensor(root)


def entry(a: CirculantTensor, idx) -> float:
    """Entry a_{j1...jm}: shift all indices so the first becomes 1, read root.

    The reduction is sigma_l = ((j_l - j_1) mod n) + 1 for l = 2..m, which is
    the row-recursion identity applied j_1 - 1 times.
    """
    j = _to0(idx, a.dim, a.order)
    sigma = tuple((jl - j[0]) % a.dim for jl in j[1:])
    return float(a.root.array[sigma])


def row_tensor(a: CirculantTensor, k: int) -> DenseTensor:
    """k-th row tensor (entries a_{k j2...jm}); k=1 returns the root."""
    if not 1 <= k <= a.dim:
        raise ValueError(f"row index {k} out of range [1, {a.dim}]")
    arr = a.root.array
    shift = (k - 1,) * arr.ndim
    return DenseTensor(np.roll(arr, shift, axis=tuple(range(arr.ndim))))


def materialize(a: Tensor, budget: int | None = None) -> DenseTensor:
    """Dense tensor agreeing with entry() everywhere (budget-capped)."""
    if isinstance(a, DenseTensor):
        return a
    _check_budget(a.dim, a.order, budget)
    rows = [row_tensor(a, k).array for k in range(1, a.dim + 1)]
    return DenseTensor(np.stack(rows, axis=0))


def is_circulant(t: Tensor, tol: float = 0.0) -> bool:
    """True iff entries are invariant under the simultaneous cyclic index shift."""
    if isinstance(t, CirculantTensor):
        return True
    arr = t.array
    if arr.ndim < 2:
        raise ValueError("circulant test needs order >= 2")
    shifted = np.roll(arr, (1,) * arr.ndim, axis=tuple(range(arr.ndim)))
    return bool(np.max(np.abs(arr - shifted)) <= tol)


def is_toeplitz(t: Tensor, tol: float = 0.0) -> bool:
    """True iff a_{j1..jm} = a_{j1+1..jm+1} for all indices in [n-1]."""
    arr = materialize(t).array if isinstance(t, CirculantTensor) else t.array
    if arr.ndim < 2:
        raise ValueError("Toeplitz test needs order >= 2")
    lo = arr[(slice(0, -1),) * arr.ndim]
    hi = arr[(slice(1, None),) * arr.ndim]
    return bool(np.max(np.abs(lo - hi)) <= tol) if lo.size else True


def as_circulant(t: Tensor, tol: float = 0.0) -> CirculantTensor:
    """View a (numerically) circulant dense tensor through its first row."""
    if isinstance(t, CirculantTensor):
        return t
    if not is_circulant(t, tol):
        raise ValueError("tensor is not circulant within tolerance")
    return CirculantTensor(DenseTensor(t.array[0]))


def _contract_all(arr: np.ndarray, x: np.ndarray):
    """Multilinear form of a dense array: contract every mode with x."""
    out = arr
    for _ in range(arr.ndim):
        out = np.tensordot(out, x, axes=([out.ndim - 1], [0]))
    return out


def apply_full(a: Tensor, x) -> float | complex:
    """Homogeneous form A x^m = sum a_{j1..jm} x_{j1}...x_{jm}.

    Circulant input is evaluated from the root without materializing:
    A x^m = sum_k x_k * rootform(x rotated by k-1).
    """
    x = np.asarray(x)
    if isinstance(a, DenseTensor):
        if x.shape != (a.dim,):
            raise ValueError(f"expected vector of length {a.dim}")
        val = _contract_all(a.array, x)
    else:
        if x.shape != (a.dim,):
            raise ValueError(f"expected vector of length {a.dim}")
        rows = apply_partial(a, x)
        val = np.dot(x, rows)
    return complex(val) if np.iscomplexobj(x) else float(val)


def apply_partial(a: Tensor, x) -> np.ndarray:
    """The vector A x^{m-1} with components sum a_{j j2..jm} x_{j2}...x_{jm}."""
    x = np.asarray(x)
    n = a.dim
    if x.shape != (n,):
        raise ValueError(f"expected vector of length {n}")
    if isinstance(a, DenseTensor):
        out = a.array
        for _ in range(a.order - 1):
            out = np.tensordot(out, x, axes=([out.ndim - 1], [0]))
        return out
    root = a.root.array
    # row k sees x rotated left by k-1 positions
    return np.array([_contract_all(root, np.roll(x, -k)) for k in range(n)])


def matrix_product(a: Tensor, q: np.ndarray) -> DenseTensor:
    """Mode-uniform product A Q^m: contract every mode of A with Q.

    Satisfies (A Q^m) x^m = A (Qx)^m.  Q may be rectangular (n x N), in which
    case the output dimension is N.
    """
    q = np.asarray(q, dtype=float)
    arr = materialize(a).array if isinstance(a, CirculantTensor) else a.array
    if q.ndim != 2 or q.shape[0] != arr.shape[0]:
        raise ValueError(f"matrix must have {arr.shape[0]} rows, got {q.shape}")
    out = arr
    for _ in range(arr.ndim):
        out = np.tensordot(out, q, axes=([0], [0]))
    return DenseTensor(out)


def symmetrize(a: Tensor, budget: int | None = None):
    """The unique symmetric tensor with the same homogeneous form.

    Averages the dense array over all mode permutations (uniform multiplicity
    makes this equal to the distinct-permutation average).  Circulant input
    yields circulant output and is returned in root form.
    """
    circ_in = isinstance(a, CirculantTensor)
    arr = materialize(a, budget).array
    m = arr.ndim
    acc = np.zeros_like(arr)
    for perm in itertools.permutations(range(m)):
        acc += np.transpose(arr, perm)
    acc /= math.factorial(m)
    if circ_in:
        return CirculantTensor(DenseTensor(acc[0]))
    return DenseTensor(acc)


def diagonal_part(a: Tensor) -> DenseTensor:
    """Diagonal tensor carrying A's diagonal entries."""
    if isinstance(a, CirculantTensor):
        n, m = a.dim, a.order
        diag = np.full(n, a.diagonal_entry)
    else:
        arr = a.array
        n, m = a.dim, a.order
        diag = np.array([arr[(j,) * m] for j in range(n)])
    out = np.zeros((n,) * m)
    for j in range(n):
        out[(j,) * m] = diag[j]
    return DenseTensor(out)


def perm_matrix(n: int) -> np.ndarray:
    """Cyclic shift matrix P: ones on the superdiagonal and at (n, 1)."""
    p = np.zeros((n, n))
    for j in range(n - 1):
        p[j, j + 1] = 1.0
    p[n - 1, 0] = 1.0
    return p


def identity_tensor(m: int, n: int) -> DenseTensor:
    """Ones on the diagonal, zeros elsewhere."""
    out = np.zeros((n,) * m)
    for j in range(n):
        out[(j,) * m] = 1.0
    return DenseTensor(out)


def associated_array(a: CirculantTensor) -> np.ndarray:
    """Root tensor with its (1,...,1) entry zeroed (the off-diagonal carrier)."""
    arr = a.root.array.copy()
    arr[(0,) * arr.ndim] = 0.0
    return arr
