# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Cyclic Jacobi eigensolver for small dense symmetric matrices.

Deterministic sweep order, so repeated calls on identical input give
bitwise-identical results.  Intended for the n <= 36 matrices this package
produces; the pure-numpy backend is the fallback when this extension is not
built.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport fabs, sqrt

cnp.import_array()

DEF MAX_SWEEPS = 64


cdef int _jacobi(double[:, ::1] a, double[:, ::1] v, int n, bint want_vectors) noexcept nogil:
    cdef int sweep, p, q, i
    cdef double off, scale, thresh, apq, app, aqq, tau, t, c, s, aip, aiq, vip, viq

    scale = 0.0
    for p in range(n):
        for q in range(n):
            if fabs(a[p, q]) > scale:
                scale = fabs(a[p, q])
    if scale == 0.0:
        return 0

    for sweep in range(MAX_SWEEPS):
        off = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                off += a[p, q] * a[p, q]
        if sqrt(off) <= 1e-15 * scale * n:
            return sweep
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if fabs(apq) <= 1e-18 * scale:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                tau = (aqq - app) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + sqrt(1.0 + tau * tau))
                c = 1.0 / sqrt(1.0 + t * t)
                s = t * c
                for i in range(n):
                    if i != p and i != q:
                        aip = a[i, p]
                        aiq = a[i, q]
                        a[i, p] = aip * c - aiq * s
                        a[p, i] = a[i, p]
                        a[i, q] = aiq * c + aip * s
                        a[q, i] = a[i, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                if want_vectors:
                    for i in range(n):
                        vip = v[i, p]
                        viq = v[i, q]
                        v[i, p] = vip * c - viq * s
                        v[i, q] = viq * c + vip * s
    return MAX_SWEEPS


def jacobi_eigh(a_in):
    """Eigendecomposition of a symmetric matrix: ascending (w, V)."""
    a = np.array(a_in, dtype=np.float64, order="C", copy=True)
    cdef int n = a.shape[0]
    if a.shape[1] != n:
        raise ValueError("matrix must be square")
    v = np.eye(n, dtype=np.float64)
    cdef double[:, ::1] am = a
    cdef double[:, ::1] vm = v
    with nogil:
        _jacobi(am, vm, n, True)
    w = np.diagonal(a).copy()
    order = np.argsort(w, kind="stable")
    return w[order], np.ascontiguousarray(v[:, order])


def jacobi_eigvalsh(a_in):
    """Eigenvalues only, ascending."""
    a = np.array(a_in, dtype=np.float64, order="C", copy=True)
    cdef int n = a.shape[0]
    if a.shape[1] != n:
        raise ValueError("matrix must be square")
    cdef double[:, ::1] am = a
    cdef double[:, ::1] vm = am  # unused
    with nogil:
        _jacobi(am, vm, n, False)
    w = np.diagonal(a).copy()
    w.sort(kind="stable")
    return w
