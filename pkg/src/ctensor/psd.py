"""Positive semi-definiteness decision chain for even-order circulant tensors.

Order of attack: cheap necessary sign checks, exact special-structure routes
(diagonal root, doubly circulant), then the sufficiency certificates
(diagonal dominance, B0/B class, sign-structured associated tensors), and
finally, when allowed, a multi-start sphere minimization.  Certificates are
sound; numeric evidence can refute (with a verified witness) but never
certifies semi-definiteness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .admm import AdmmParams, multi_start
from .core import (
    CirculantTensor,
    apply_full,
    associated_array,
    materialize,
)
from .diag_root import DiagRootSpec, diag_root_psd, diag_root_vector, doubly_psd
from .spectral import alternative_native, first_native
from .structure import (
    b_class,
    hat_one_k,
    is_doubly_circulant,
    is_negatively_alternative,
)
from .verdict import (
    B0_CERT,
    B_CERT,
    DIAG_DOMINANCE,
    INCONCLUSIVE,
    NEG_ALT,
    NONPOS_ASSOC,
    NOT_PSD,
    NUMERIC,
    PsdVerdict,
    inconclusive,
    psd_verdict,
)

# computed row/eigenvalue sums are declared negative only beyond this
# relative slack; raw entries are compared exactly
_SUM_TOL = 1e-12


@dataclass(frozen=True)
class CheckResult:
    name: str
    value: float
    passed: bool


def _require_even_circulant(a) -> None:
    if not isinstance(a, CirculantTensor):
        raise TypeError("semi-definiteness chain expects a circulant tensor")
    if a.order % 2:
        raise ValueError("positive semi-definiteness is defined for even order")


def _root_scale(a: CirculantTensor) -> float:
    return max(1.0, math.fsum(np.abs(a.root.array).reshape(-1)))


def _verified_not_psd(a, witness, certificate, details) -> PsdVerdict | None:
    witness = np.asarray(witness, dtype=float)
    value = float(apply_full(a, witness))
    if value >= 0:
        return None
    details = dict(details)
    details["witness_value"] = value
    return PsdVerdict(NOT_PSD, certificate, witness, details)


def necessary_checks(a: CirculantTensor):
    """The sign conditions every even-order PSD circulant tensor satisfies.

    Returns (checks, verdict): the list of individual results and, when one
    fails with a verifiable witness, the refuting verdict (witness 1_1, 1,
    or the alternating vector respectively).
    """
    _require_even_circulant(a)
    n = a.dim
    tol = _SUM_TOL * _root_scale(a)
    checks = []
    verdict = None

    c0 = a.diagonal_entry
    checks.append(CheckResult("diagonal_entry", c0, c0 >= 0))
    if c0 < 0 and verdict is None:
        e1 = np.zeros(n)
        e1[0] = 1.0
        verdict = _verified_not_psd(a, e1, None, {"failed": "diagonal_entry"})

    lam0 = first_native(a)
    checks.append(CheckResult("first_native", lam0, lam0 >= -tol))
    if lam0 < -tol and verdict is None:
        verdict = _verified_not_psd(a, np.ones(n), None, {"failed": "first_native"})

    if n % 2 == 0:
        lam_half = alternative_native(a)
        checks.append(CheckResult("alternative_native", lam_half, lam_half >= -tol))
        if lam_half < -tol and verdict is None:
            verdict = _verified_not_psd(
                a, hat_one_k(n, 1), None, {"failed": "alternative_native"}
            )
    return checks, verdict


def sufficient_diag_dominance(a: CirculantTensor) -> PsdVerdict | None:
    """Certificate: diagonal entry dominates the associated-tensor 1-norm."""
    _require_even_circulant(a)
    radius = math.fsum(np.abs(associated_array(a)).reshape(-1))
    c0 = a.diagonal_entry
    if c0 >= radius:
        return psd_verdict(DIAG_DOMINANCE, c0=c0, associated_abs_sum=radius)
    return None


def sufficient_b_class(a: CirculantTensor) -> PsdVerdict | None:
    """Certificate: circulant B0 tensors are PSD, circulant B tensors are PD."""
    _require_even_circulant(a)
    report = b_class(a)
    if report.is_b:
        return psd_verdict(B_CERT, strict=True, max_offdiag=report.max_offdiag)
    if report.is_b0:
        return psd_verdict(B0_CERT, max_offdiag=report.max_offdiag)
    return None


def exact_special_cases(a: CirculantTensor) -> PsdVerdict | None:
    """Exact decisions from the associated tensor's sign structure.

    Non-positive associated tensor: PSD iff the first native eigenvalue is
    nonnegative.  Negatively alternative associated tensor (m, n even):
    PSD iff the alternative native eigenvalue is nonnegative.
    """
    _require_even_circulant(a)
    assoc = associated_array(a)
    tol = _SUM_TOL * _root_scale(a)
    if np.all(assoc <= 0):
        lam0 = first_native(a)
        if lam0 >= -tol:
            return psd_verdict(NONPOS_ASSOC, lambda0=lam0)
        v = _verified_not_psd(a, np.ones(a.dim), NONPOS_ASSOC, {"lambda0": lam0})
        if v is not None:
            return v
    if a.dim % 2 == 0 and is_negatively_alternative(assoc):
        lam_half = alternative_native(a)
        if lam_half >= -tol:
            return psd_verdict(NEG_ALT, lambda_n_half=lam_half)
        v = _verified_not_psd(
            a, hat_one_k(a.dim, 1), NEG_ALT, {"lambda_n_half": lam_half}
        )
        if v is not None:
            return v
    return None


def check_psd(
    a: CirculantTensor,
    mode: str = "with_numeric",
    restarts: int = 24,
    seed: int = 0,
    params: AdmmParams | None = None,
) -> PsdVerdict:
    """Run the full decision chain; the first firing route wins.

    ``certificates_only`` stops before the numeric stage.  The numeric stage
    refutes when the best multi-start value falls below -1e-6 * scale and the
    point re-evaluates negative; a nonnegative numeric minimum is reported as
    evidence only (inconclusive), never as a PSD claim.
    """
    if mode not in ("with_numeric", "certificates_only"):
        raise ValueError(f"unknown mode {mode!r}")
    _require_even_circulant(a)
    trail: dict = {}

    checks, verdict = necessary_checks(a)
    trail["necessary"] = [(c.name, c.value, c.passed) for c in checks]
    if verdict is not None:
        verdict.details.update(trail)
        return verdict

    c = diag_root_vector(a)
    if c is not None:
        v = diag_root_psd(DiagRootSpec(a.order, c))
        if v.decision != INCONCLUSIVE:
            v.details.update(trail)
            return v
        trail["diag_root"] = v.details.get("route", "undecided")

    if a.order >= 4 and is_doubly_circulant(a):
        v = doubly_psd(a)
        if v.decision != INCONCLUSIVE:
            v.details.update(trail)
            return v
        trail["doubly_circulant"] = v.details.get("route", "undecided")

    for route in (sufficient_diag_dominance, sufficient_b_class, exact_special_cases):
        v = route(a)
        if v is not None:
            v.details.update(trail)
            return v

    if mode == "certificates_only":
        return inconclusive(**trail)

    # tighter iteration budget than the user-facing default: escalation
    # resolves the slow-consensus cases far faster than a long stall does
    params = params or AdmmParams(seed=seed, max_iters=1200, escalations=3)
    report = multi_start(a, params, restarts=restarts)
    best = report.best
    scale = _root_scale(a)
    trail["numeric_best"] = best.value
    trail["numeric_converged"] = best.converged
    if best.value < -1e-6 * scale:
        v = _verified_not_psd(a, best.point, NUMERIC, trail)
        if v is not None:
            return v
    return PsdVerdict(INCONCLUSIVE, NUMERIC, None, trail)


def _batch_form(arr: np.ndarray, pts: np.ndarray) -> np.ndarray:
    m = arr.ndim
    letters = "ijklpqrs"[:m]
    subs = letters + "," + ",".join("a" + ch for ch in letters) + "->a"
    return np.einsum(subs, arr, *([pts] * m))


def _circle_points(num: int) -> np.ndarray:
    theta = np.linspace(0.0, 2 * np.pi, num, endpoint=False)
    return np.column_stack([np.cos(theta), np.sin(theta)])


def _fibonacci_sphere(num: int) -> np.ndarray:
    i = np.arange(num) + 0.5
    phi = np.arccos(1 - 2 * i / num)
    golden = np.pi * (1 + 5**0.5)
    theta = golden * i
    return np.column_stack(
        [np.sin(phi) * np.cos(theta), np.sin(phi) * np.sin(theta), np.cos(phi)]
    )


def _tangent_frame(x: np.ndarray) -> np.ndarray:
    n = len(x)
    basis = []
    for i in range(n):
        e = np.zeros(n)
        e[i] = 1.0
        v = e - np.dot(e, x) * x
        for b in basis:
            v -= np.dot(v, b) * b
        nv = np.linalg.norm(v)
        if nv > 1e-8:
            basis.append(v / nv)
        if len(basis) == n - 1:
            break
    return np.array(basis)


@dataclass
class BruteResult:
    value: float
    argmin: np.ndarray
    details: dict


def brute_force_min(
    a, resolution: int | None = None, refine_rounds: int = 8
) -> BruteResult:
    """Grid search for min A x^m over the unit sphere (n <= 4).

    Every evaluated point is feasible, so the returned value is an upper
    bound on the true minimum; the reported Lipschitz bound times the grid
    covering radius bounds the gap from below.  A shrinking local grid
    around the incumbent sharpens the value far beyond the base grid.
    """
    arr = materialize(a).array
    n = arr.shape[0]
    if n == 2:
        num = resolution or 2000
        pts = _circle_points(num)
        cover = np.pi / num
    elif n == 3:
        num = resolution or 10**4
        pts = _fibonacci_sphere(num)
        cover = 3.0 / math.sqrt(num)
    elif n == 4:
        # seeded uniform sphere sample; the coverage bound is heuristic here
        num = resolution or 4 * 10**4
        rng = np.random.default_rng(0)
        pts = rng.normal(size=(num, 4))
        pts /= np.linalg.norm(pts, axis=1, keepdims=True)
        cover = 4.0 / num ** (1 / 3)
    else:
        raise ValueError("brute-force oracle supports n in {2, 3, 4} only")

    vals = _batch_form(arr, pts)
    best_i = int(np.argmin(vals))
    best_x = pts[best_i]
    best_v = float(vals[best_i])
    grid_min = best_v

    span = cover * 2
    for _ in range(refine_rounds):
        frame = _tangent_frame(best_x)
        steps = np.linspace(-span, span, 9)
        grids = np.meshgrid(*([steps] * (n - 1)))
        local = best_x[None, :] + sum(
            g.reshape(-1, 1) * frame[i][None, :] for i, g in enumerate(grids)
        )
        local /= np.linalg.norm(local, axis=1, keepdims=True)
        lv = _batch_form(arr, local)
        i = int(np.argmin(lv))
        if lv[i] < best_v:
            best_v = float(lv[i])
            best_x = local[i]
        span *= 0.25

    lipschitz = arr.ndim * math.fsum(np.abs(arr).reshape(-1))
    details = {
        "grid_points": len(pts),
        "grid_min": grid_min,
        "lipschitz": lipschitz,
        "covering_radius": cover,
        "lower_bound": grid_min - lipschitz * cover,
    }
    return BruteResult(value=best_v, argmin=best_x, details=details)
