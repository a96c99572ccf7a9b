"""Note-activation recovery: non-negative least squares per analysis frame.

Thin wrapper over the batched kernel in ``tonnetzlab.kernels`` (compiled when
available, numpy otherwise). Frames are independent, so a batch solve is just
the per-frame solve applied row by row; results do not depend on batch order.
"""

from __future__ import annotations

import numpy as np

from .. import kernels
from ..kernels._nnls_py import nnls_solve_one
from .dictionary import NoteDictionary

DEFAULT_TOL = 1e-6
DEFAULT_MAX_ITER = 500


def nnls_activations_batch(
    frames: np.ndarray,
    dictionary: NoteDictionary,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> np.ndarray:
    """Activations (n_frames, notes) approximately minimizing ||D a - f||, a >= 0."""
    frames = np.ascontiguousarray(frames, dtype=np.float64)
    gram = np.ascontiguousarray(dictionary.gram())
    targets = np.ascontiguousarray(frames @ dictionary.profiles)
    sq_norms = np.ascontiguousarray(np.sum(frames * frames, axis=1))
    return kernels.nnls_batch(
        gram, targets, sq_norms, dictionary.step_bound(), tol, max_iter
    )


def nnls_activations(
    frame: np.ndarray,
    dictionary: NoteDictionary,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> np.ndarray:
    """Single-frame convenience wrapper."""
    return nnls_activations_batch(frame[None, :], dictionary, tol, max_iter)[0]


def nnls_residual_history(
    frame: np.ndarray,
    dictionary: NoteDictionary,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> tuple[np.ndarray, list[float]]:
    """Solve one frame recording ||D a - f|| at every iteration.

    Always runs the numpy implementation; used to check solver properties
    such as the monotone non-increasing residual.
    """
    frame = np.asarray(frame, dtype=np.float64)
    history: list[float] = []
    activations = nnls_solve_one(
        dictionary.gram(),
        frame @ dictionary.profiles,
        float(frame @ frame),
        dictionary.step_bound(),
        tol,
        max_iter,
        residual_history=history,
    )
    return activations, history
