"""Quadratic-form kernels with a compiled core and a numpy fallback.

The compiled extension (``kernsig._qf``) is preferred when it imported
successfully; otherwise, or when ``KERNSIG_NO_EXTENSION`` is set in the
environment, pure numpy implementations with identical semantics are used.
``BACKEND`` records which one is active.
"""
import os

import numpy as np

try:
    if os.environ.get("KERNSIG_NO_EXTENSION"):
        _ext = None
    else:
        from . import _qf as _ext
except ImportError:
    _ext = None

BACKEND = "numpy" if _ext is None else "cython"


def _as_c_double(a):
    return np.ascontiguousarray(a, dtype=np.float64)


def quad_form_cols(k, et):
    """Off-diagonal quadratic forms sum_{i != j} k[i,j] e_i e_j, one per row of et.

    k is a symmetric (n, n) matrix and et an (ncols, n) array whose rows are
    the noise vectors. Returns shape (ncols,).
    """
    k = _as_c_double(k)
    et = _as_c_double(et)
    out = np.empty(et.shape[0])
    if _ext is not None:
        _ext.quad_form_cols(k, et, out)
    else:
        m = et @ k
        np.einsum("bi,bi->b", m, et, out=out)
        out -= (et * et) @ np.diagonal(k)
    return out


def cell_quad_form_cols(order, cell_sorted, et):
    """Off-diagonal quadratic form of a same-cell indicator kernel, unit scale.

    order: point indices grouped by cell; cell_sorted: cell id per position
    of order. Returns sum_c S_c^2 - sum_i e_i^2 per row of et, which equals
    sum_{i != j} 1{cell_i == cell_j} e_i e_j.
    """
    order = np.ascontiguousarray(order, dtype=np.intp)
    cell_sorted = np.ascontiguousarray(cell_sorted, dtype=np.intp)
    et = _as_c_double(et)
    out = np.empty(et.shape[0])
    if _ext is not None:
        _ext.cell_quad_form_cols(order, cell_sorted, et, out)
    else:
        es = et[:, order]
        starts = np.flatnonzero(np.r_[True, cell_sorted[1:] != cell_sorted[:-1]])
        s = np.add.reduceat(es, starts, axis=1)
        out[:] = (s * s).sum(axis=1) - (et * et).sum(axis=1)
    return out
