"""Pure-numpy projected-gradient NNLS, the reference for the Cython kernel.

Minimizes ||D a - f||_2 over a >= 0 for a batch of targets, given the Gram
matrix G = D^T D, the correlations h = D^T f, and ||f||^2 per target. With a
fixed step 1/L (L the largest eigenvalue of G) the residual is monotone
non-increasing; iteration stops when the relative residual improvement drops
below ``tol`` or after ``max_iter`` steps. The residual is evaluated as
sqrt(a.G.a - 2 a.h + ||f||^2), so the full dictionary is never needed here.
"""

from __future__ import annotations

import math

import numpy as np


def nnls_solve_one(
    gram: np.ndarray,
    target: np.ndarray,
    target_sq_norm: float,
    step_bound: float,
    tol: float = 1e-6,
    max_iter: int = 500,
    residual_history: list[float] | None = None,
) -> np.ndarray:
    """Solve one NNLS instance; optionally record the residual per iteration."""
    n = gram.shape[0]
    x = np.zeros(n)
    q = np.zeros(n)  # gram @ x, carried across iterations
    r_prev = math.sqrt(max(target_sq_norm, 0.0))
    if residual_history is not None:
        residual_history.append(r_prev)
    if r_prev == 0.0:
        return x
    for _ in range(max_iter):
        x = np.maximum(0.0, x - (q - target) / step_bound)
        q = gram @ x
        sq = float(x @ q - 2.0 * (x @ target) + target_sq_norm)
        r = math.sqrt(max(sq, 0.0))
        if residual_history is not None:
            residual_history.append(r)
        if r == 0.0 or (r_prev - r) / r_prev < tol:
            break
        r_prev = r
    return x


def nnls_batch(
    gram: np.ndarray,
    targets: np.ndarray,
    target_sq_norms: np.ndarray,
    step_bound: float,
    tol: float = 1e-6,
    max_iter: int = 500,
) -> np.ndarray:
    """Solve NNLS for every row of ``targets``; returns activations per row."""
    out = np.zeros_like(targets)
    for i in range(targets.shape[0]):
        out[i] = nnls_solve_one(
            gram, targets[i], float(target_sq_norms[i]), step_bound, tol, max_iter
        )
    return out
