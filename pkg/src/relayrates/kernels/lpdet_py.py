"""Pure-numpy twin of the compiled log-pseudo-determinant kernel."""

import numpy as np


def max_size():
    """No size limit for the numpy path."""
    return None


def lpdet_rank(gram, idx, rel_tol):
    """Sum of log eigenvalues above tolerance and the rank of gram[idx][:, idx].

    Same contract as the compiled kernel: eigenvalues <= rel_tol times
    max(largest eigenvalue, 1) count as zero.
    """
    k = len(idx)
    if k == 0:
        return 0.0, 0
    sub = gram[np.ix_(idx, idx)]
    w = np.linalg.eigvalsh(sub)
    tol = rel_tol * max(float(w[-1]), 1.0)
    kept = w[w > tol]
    return float(np.log(kept).sum()), int(kept.size)
