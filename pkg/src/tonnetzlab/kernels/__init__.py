"""Batched non-negative least-squares kernel with backend selection.

The projected-gradient inner loop dominates the audio pipeline's runtime, so
it exists twice: a Cython extension (built when Cython and a C compiler are
present) and a numpy fallback with identical iteration logic. The compiled
backend is picked at import time when available.
"""

from . import _nnls_py

try:
    from . import _nnls_cy as _impl

    BACKEND = "cython"
except ImportError:
    _impl = _nnls_py
    BACKEND = "python"

nnls_batch = _impl.nnls_batch
nnls_batch_python = _nnls_py.nnls_batch

__all__ = ["BACKEND", "nnls_batch", "nnls_batch_python"]
