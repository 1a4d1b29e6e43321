# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled log-pseudo-determinant kernel.

This is the hot inner loop of every entropy / mutual-information query:
extract a principal submatrix of a Gram matrix and sum the logs of its
eigenvalues above a relative tolerance.  Uses LAPACK dsyev directly to
avoid per-call numpy overhead on the small (<= 32 x 32) matrices that
dominate the parameter searches.
"""

from libc.math cimport log
from scipy.linalg.cython_lapack cimport dsyev

# Fixed work buffers; submatrices in this package never exceed ~20 rows.
# dsyev needs lwork >= 3*n - 1.
cdef enum:
    MAXN = 32
    LWORK = 34 * 32


def max_size():
    """Largest submatrix the compiled kernel accepts."""
    return MAXN


def lpdet_rank(const double[:, :] gram, const long long[::1] idx, double rel_tol):
    """Sum of log eigenvalues above tolerance and the rank of gram[idx][:, idx].

    Eigenvalues <= rel_tol * max(largest eigenvalue, 1) count as zero.
    Returns (log_pseudo_det, rank).
    """
    cdef int k = <int> idx.shape[0]
    if k == 0:
        return 0.0, 0
    if k > MAXN:
        raise ValueError("submatrix larger than compiled kernel limit")

    cdef double a[MAXN * MAXN]
    cdef double w[MAXN]
    cdef double work[LWORK]
    cdef int n = k, lwork = LWORK, info = 0
    cdef Py_ssize_t i, j

    # Symmetric input, so row- vs column-major layout is immaterial.
    for i in range(k):
        for j in range(k):
            a[i * k + j] = gram[idx[i], idx[j]]

    dsyev("N", "L", &n, &a[0], &n, &w[0], &work[0], &lwork, &info)
    if info != 0:
        raise RuntimeError("dsyev failed to converge (info=%d)" % info)

    cdef double wmax = w[k - 1] if w[k - 1] > 1.0 else 1.0
    cdef double tol = rel_tol * wmax
    cdef double acc = 0.0
    cdef int rank = 0
    for i in range(k):
        if w[i] > tol:
            acc += log(w[i])
            rank += 1
    return acc, rank
