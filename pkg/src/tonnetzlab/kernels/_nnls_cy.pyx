# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled projected-gradient NNLS kernel.

Iteration logic mirrors _nnls_py exactly: fixed step 1/L, stop on relative
residual improvement below tol or after max_iter steps. The whole batch loop
runs without the GIL.
"""

from libc.math cimport sqrt

import numpy as np


def nnls_batch(double[:, ::1] gram, double[:, ::1] targets,
               double[::1] target_sq_norms, double step_bound,
               double tol=1e-6, int max_iter=500):
    cdef Py_ssize_t n_frames = targets.shape[0]
    cdef Py_ssize_t n = gram.shape[0]
    out_arr = np.zeros((n_frames, n), dtype=np.float64)
    work_arr = np.zeros(n, dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    cdef double[::1] q = work_arr
    cdef Py_ssize_t frame, i, j, it
    cdef double r_prev, r, sq, acc, xi, f2

    with nogil:
        for frame in range(n_frames):
            f2 = target_sq_norms[frame]
            if f2 < 0.0:
                f2 = 0.0
            r_prev = sqrt(f2)
            if r_prev == 0.0:
                continue
            for i in range(n):
                q[i] = 0.0
            for it in range(max_iter):
                # x <- max(0, x - (q - h) / L), with q = gram @ x carried over
                for i in range(n):
                    xi = out[frame, i] - (q[i] - targets[frame, i]) / step_bound
                    out[frame, i] = xi if xi > 0.0 else 0.0
                # q = gram @ x and residual^2 = x.q - 2 x.h + f2
                sq = f2
                for i in range(n):
                    acc = 0.0
                    for j in range(n):
                        acc += gram[i, j] * out[frame, j]
                    q[i] = acc
                    sq += out[frame, i] * (acc - 2.0 * targets[frame, i])
                if sq < 0.0:
                    sq = 0.0
                r = sqrt(sq)
                if r == 0.0 or (r_prev - r) / r_prev < tol:
                    break
                r_prev = r
    return out_arr
