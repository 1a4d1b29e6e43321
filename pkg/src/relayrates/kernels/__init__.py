"""Kernel selection: compiled Cython log-pseudo-det if available, numpy otherwise.

Set RELAYRATES_PURE=1 in the environment to force the numpy path (used by the
benchmark to time both implementations in separate processes).
"""

import os

from . import lpdet_py

COMPILED = False
_impl = lpdet_py.lpdet_rank
_impl_max = None

if not os.environ.get("RELAYRATES_PURE"):
    try:
        from . import _lpdet

        _impl = _lpdet.lpdet_rank
        _impl_max = _lpdet.max_size()
        COMPILED = True
    except ImportError:
        pass


def lpdet_rank(gram, idx, rel_tol):
    """Dispatch to the active kernel; oversized inputs fall back to numpy."""
    if _impl_max is not None and idx.shape[0] > _impl_max:
        return lpdet_py.lpdet_rank(gram, idx, rel_tol)
    return _impl(gram, idx, rel_tol)


def kernel_name():
    return "compiled" if COMPILED else "pure-python"
