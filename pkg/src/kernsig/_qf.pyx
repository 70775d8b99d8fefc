# cython: boundscheck=False, wraparound=False, cdivision=True
# Compiled core for the Monte Carlo quadratic-form workload. Each noise
# column is reduced sequentially in a fixed order, so the output is
# bit-identical for any number of OpenMP threads.
from cython.parallel import prange


def quad_form_cols(double[:, ::1] k, double[:, ::1] et, double[::1] out):
    """out[b] = sum over i != j of k[i, j] * et[b, i] * et[b, j].

    k: symmetric n x n matrix. et: one noise column per row (ncols x n).
    Exploits symmetry; the diagonal of k never enters.
    """
    cdef Py_ssize_t n = k.shape[0]
    cdef Py_ssize_t ncols = et.shape[0]
    cdef Py_ssize_t b, i, j
    cdef double acc, ei
    for b in prange(ncols, nogil=True, schedule="static"):
        acc = 0.0
        for i in range(n):
            ei = et[b, i]
            for j in range(i + 1, n):
                acc = acc + k[i, j] * ei * et[b, j]
        out[b] = 2.0 * acc


def cell_quad_form_cols(Py_ssize_t[::1] order, Py_ssize_t[::1] cell_sorted,
                        double[:, ::1] et, double[::1] out):
    """out[b] = sum_c S_c(b)^2 - sum_i et[b, i]^2, where S_c(b) sums
    et[b, i] over the points i falling in cell c.

    order lists point indices grouped by cell; cell_sorted[t] is the cell
    id at position t of order. This is the off-diagonal quadratic form of
    a same-cell indicator kernel (unit scale) in O(n) per column.
    """
    cdef Py_ssize_t n = order.shape[0]
    cdef Py_ssize_t ncols = et.shape[0]
    cdef Py_ssize_t b, t, cur
    cdef double total, run, sumsq, e
    for b in prange(ncols, nogil=True, schedule="static"):
        total = 0.0
        run = 0.0
        sumsq = 0.0
        cur = cell_sorted[0]
        for t in range(n):
            e = et[b, order[t]]
            if cell_sorted[t] != cur:
                total = total + run * run
                run = 0.0
                cur = cell_sorted[t]
            run = run + e
            sumsq = sumsq + e * e
        total = total + run * run
        out[b] = total - sumsq
