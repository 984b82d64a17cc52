"""Native eigenvalues of circulant tensors via the associated polynomial.

Every circulant tensor of dimension n shares the n eigenvectors
v_k = (1, w_k, ..., w_k^{n-1}) with w_k = exp(2*pi*i*k/n); the corresponding
eigenvalues are the values of the associated polynomial at the w_k.  The
first one (k = 0) and, for even n, the middle one (k = n/2) are real
H-eigenvalues with H-eigenvectors 1 and (1, -1, 1, -1, ...).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import CirculantTensor, apply_partial, associated_array
from .structure import SignClass, classify_sign_array


@dataclass(frozen=True)
class NativeSpectrum:
    """The n shared eigenvalues and the reduced polynomial coefficients."""

    lambdas: np.ndarray  # complex, length n; lambdas[k] = f(w_k)
    coeffs: np.ndarray  # real, length n; exponent-reduced mod n

    @property
    def first(self) -> float:
        return float(self.lambdas[0].real)

    @property
    def alternative(self) -> float:
        n = len(self.lambdas)
        if n % 2:
            raise ValueError("alternative native eigenvalue needs even n")
        return float(self.lambdas[n // 2].real)


@dataclass(frozen=True)
class GershgorinDisc:
    center: float
    radius: float

    def contains(self, z: complex, tol: float = 0.0) -> bool:
        return abs(z - self.center) <= self.radius + tol


@dataclass(frozen=True)
class ExtremeEigenvalue:
    """Certified largest/smallest H-eigenvalue with the structural basis."""

    value: float
    kind: str  # "largest" | "smallest"
    basis: str  # which sign structure of the associated tensor applied


def _fold_exponents(arr: np.ndarray, n: int) -> np.ndarray:
    """coeffs[s] = sum of entries over index tuples with sum(idx0) = s (mod n)."""
    if arr.ndim == 1:
        out = np.zeros(n)
        out[:] = arr
        return out
    out = np.zeros(n)
    for i in range(n):
        out += np.roll(_fold_exponents(arr[i], n), i)
    return out


def associated_coeffs(a: CirculantTensor) -> np.ndarray:
    """Coefficients of the associated polynomial, exponents reduced mod n.

    The exponent of a root entry at (1-based) indices (j1..j_{m-1}) is
    j1+...+j_{m-1}-m+1 = sum of the 0-based indices; reduction mod n is valid
    because the polynomial is only ever evaluated at n-th roots of unity.
    """
    return _fold_exponents(a.root.array, a.dim)


def native_eigenvalues(a: CirculantTensor) -> NativeSpectrum:
    """All n native eigenvalues lambda_k = sum_s coeffs[s] * w_k^s."""
    coeffs = associated_coeffs(a)
    n = a.dim
    # ifft uses the +2*pi*i*k*s/n kernel, so n * ifft is exactly this sum
    lambdas = np.fft.ifft(coeffs) * n
    return NativeSpectrum(lambdas=lambdas, coeffs=coeffs)


def native_eigenvector(n: int, k: int) -> np.ndarray:
    """v_k = (1, w_k, ..., w_k^{n-1})."""
    w = np.exp(2j * np.pi * k / n)
    return w ** np.arange(n)


def first_native(a: CirculantTensor) -> float:
    """lambda_0: the sum of all root entries (an H-eigenvalue, eigenvector 1)."""
    return math.fsum(a.root.array.reshape(-1))


def alternative_native(a: CirculantTensor) -> float:
    """lambda_{n/2} for even n: the parity-alternating root sum (eigenvector 1^)."""
    n = a.dim
    if n % 2:
        raise ValueError("alternative native eigenvalue needs even n")
    arr = a.root.array
    signs = np.ones(())
    for _ in range(arr.ndim):
        signs = np.multiply.outer(signs, (-1.0) ** np.arange(n))
    return math.fsum((arr * signs).reshape(-1))


def gershgorin(a: CirculantTensor) -> GershgorinDisc:
    """Disc centered at the diagonal entry with the associated-tensor 1-norm radius.

    Every eigenvalue of the tensor lies inside it.
    """
    flat = np.abs(a.root.array).reshape(-1)
    radius = math.fsum(flat) - abs(a.diagonal_entry)
    return GershgorinDisc(center=a.diagonal_entry, radius=radius)


def eigen_residual(a, lam: complex, x) -> float:
    """sup-norm residual of A x^{m-1} = lambda * x^[m-1], scale-normalized."""
    x = np.asarray(x, dtype=complex)
    if not np.any(x):
        raise ValueError("eigenvector must be nonzero")
    lhs = apply_partial(a, x)
    rhs = lam * x ** (a.order - 1)
    scale = max(1.0, float(np.max(np.abs(x))) ** (a.order - 1))
    return float(np.max(np.abs(lhs - rhs))) / scale


def extreme_h_eigenvalue(a: CirculantTensor) -> ExtremeEigenvalue | None:
    """Largest/smallest H-eigenvalue when the associated tensor's sign
    structure identifies it; None otherwise.

    Nonnegative associated tensor -> lambda_0 is the largest H-eigenvalue;
    non-positive -> smallest.  For even n, alternative -> lambda_{n/2}
    largest; negatively alternative -> smallest.
    """
    assoc = associated_array(a)
    tag = classify_sign_array(assoc)
    if tag == SignClass.NONNEGATIVE:
        return ExtremeEigenvalue(first_native(a), "largest", "nonneg-associated")
    if tag == SignClass.NONPOSITIVE:
        return ExtremeEigenvalue(first_native(a), "smallest", "nonpos-associated")
    if a.dim % 2 == 0:
        if tag == SignClass.ALTERNATIVE:
            return ExtremeEigenvalue(alternative_native(a), "largest", "alternative-associated")
        if tag == SignClass.NEGATIVELY_ALTERNATIVE:
            return ExtremeEigenvalue(alternative_native(a), "smallest", "neg-alternative-associated")
    return None
