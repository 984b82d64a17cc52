"""Alternating direction method of multipliers on the unit sphere.

Minimizes the multilinear form A x^1 ... x^m over m unit-sphere blocks tied
together by cyclic consensus constraints x^j = x^{j+1}.  Each block update is
a linear objective on the sphere (the quadratic penalty term is constant
there), so it has the closed-form solution -b/||b||.  Multi-start from random
unit vectors recovers the global sphere minimum of A x^m with high
probability on small instances.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .core import Tensor, apply_full, materialize, symmetrize


@dataclass(frozen=True)
class AdmmParams:
    beta: float = 1.2
    epsilon: float = 1e-6
    max_iters: int = 5000
    seed: int = 0
    # if the stopping rule is never met, rerun from the same start with the
    # penalty scaled by 4, up to this many attempts; 1 disables escalation
    escalations: int = 4

    def __post_init__(self):
        if self.beta <= 0:
            raise ValueError("beta must be positive")
        if self.epsilon <= 0:
            raise ValueError("epsilon must be positive")
        if self.escalations < 1:
            raise ValueError("escalations must be >= 1")


@dataclass
class AdmmState:
    blocks: np.ndarray  # (m, n), rows unit norm
    multiplier: np.ndarray  # (m, n), block b pairs with residual block b
    iteration: int = 0


@dataclass
class AdmmResult:
    value: float
    point: np.ndarray
    iterations: int
    converged: bool
    consensus_gap: float
    time_s: float = 0.0


@dataclass
class MultiStartReport:
    best: AdmmResult
    values: np.ndarray
    iterations_mean: float
    time_mean_s: float
    success_rate: float | None = None


def consensus_residual(state: AdmmState | np.ndarray) -> np.ndarray:
    """Stacked cyclic differences (x^1-x^2, ..., x^m-x^1), zero iff consensus."""
    blocks = state.blocks if isinstance(state, AdmmState) else np.asarray(state)
    return (blocks - np.roll(blocks, -1, axis=0)).reshape(-1)


def block_gradient(a: Tensor | np.ndarray, state: AdmmState | np.ndarray, j: int) -> np.ndarray:
    """Gradient of f(x^1,...,x^m) = A x^1...x^m in block j (1-based).

    f is linear in each block, so the gradient is the contraction of A with
    every block except the j-th.
    """
    arr = a if isinstance(a, np.ndarray) else materialize(a).array
    blocks = state.blocks if isinstance(state, AdmmState) else np.asarray(state)
    if not 1 <= j <= arr.ndim:
        raise ValueError(f"block index {j} out of range [1, {arr.ndim}]")
    return _grad(arr, blocks, j - 1)


def _grad(arr: np.ndarray, blocks: np.ndarray, j0: int) -> np.ndarray:
    out = arr
    for axis in range(arr.ndim - 1, -1, -1):
        if axis == j0:
            continue
        out = np.tensordot(out, blocks[axis], axes=([axis], [0]))
    return out


def subproblem(b: np.ndarray, prev: np.ndarray) -> np.ndarray:
    """argmin of b^T x over the unit sphere: -b/||b||, or prev when b ~ 0."""
    norm = np.linalg.norm(b)
    if norm <= 1e-14:
        return prev
    return -b / norm


def _consensus_gap(blocks: np.ndarray) -> float:
    m = blocks.shape[0]
    gap = 0.0
    for i in range(m):
        for j in range(i + 1, m):
            gap = max(gap, float(np.linalg.norm(blocks[i] - blocks[j])))
    return gap


def minimize(
    a: Tensor,
    params: AdmmParams | None = None,
    x0: np.ndarray | None = None,
) -> AdmmResult:
    """Run the block-update / multiplier-update iteration until the full
    iterate (all blocks and the multiplier) moves less than epsilon.

    The iteration runs on the symmetrized tensor: the objective A x^m is
    unchanged, and exchangeable blocks keep the consensus coupling stable
    (the raw multilinear form of a one-sided tensor can cycle forever).
    """
    params = params or AdmmParams()
    arr = materialize(symmetrize(a)).array
    m, n = arr.ndim, arr.shape[0]

    if x0 is None:
        rng = np.random.default_rng(params.seed)
        x0 = rng.normal(size=n)
    x0 = np.asarray(x0, dtype=float)
    x0 = x0 / np.linalg.norm(x0)

    t0 = time.perf_counter()
    total_iters = 0
    converged = False
    x = np.tile(x0, (m, 1))
    for attempt in range(params.escalations):
        beta = params.beta * 4.0**attempt
        x = np.tile(x0, (m, 1))
        lam = np.zeros((m, n))
        for _ in range(params.max_iters):
            total_iters += 1
            w_old = np.concatenate([x.reshape(-1), lam.reshape(-1)])
            for j in range(m):
                g = _grad(arr, x, j)
                b = g - (lam[j] - lam[j - 1]) - beta * (x[j - 1] + x[(j + 1) % m])
                xj = subproblem(b, x[j])
                x[j] = xj / np.linalg.norm(xj)  # defensive renormalization
            res = x - np.roll(x, -1, axis=0)
            lam = lam - beta * res
            w_new = np.concatenate([x.reshape(-1), lam.reshape(-1)])
            if np.linalg.norm(w_new - w_old) < params.epsilon:
                converged = True
                break
        if converged:
            break

    point = x[0]
    return AdmmResult(
        value=float(apply_full(a, point)),
        point=point,
        iterations=total_iters,
        converged=converged,
        consensus_gap=_consensus_gap(x),
        time_s=time.perf_counter() - t0,
    )


def multi_start(
    a: Tensor,
    params: AdmmParams | None = None,
    restarts: int = 100,
    reference: float | None = None,
    pool=None,
) -> MultiStartReport:
    """Run ``restarts`` independent seeded solves and keep the best.

    Restart i draws its start from a generator seeded by (seed, i), so the
    report is deterministic and scheduling-independent; results are reduced
    in restart order.  When a reference optimum is given, a run counts as a
    success if its value is within 1e-5 of it.
    """
    if restarts < 1:
        raise ValueError("restarts must be >= 1")
    params = params or AdmmParams()

    def run(i: int) -> AdmmResult:
        rng = np.random.default_rng([params.seed, i])
        x0 = rng.normal(size=a.dim)
        return minimize(a, params, x0=x0)

    mapper = pool.map if pool is not None else map
    results = list(mapper(run, range(restarts)))
    best = min(results, key=lambda r: r.value)
    values = np.array([r.value for r in results])
    success = None
    if reference is not None:
        success = float(np.mean(np.abs(values - reference) <= 1e-5))
    return MultiStartReport(
        best=best,
        values=values,
        iterations_mean=float(np.mean([r.iterations for r in results])),
        time_mean_s=float(np.mean([r.time_s for r in results])),
        success_rate=success,
    )
