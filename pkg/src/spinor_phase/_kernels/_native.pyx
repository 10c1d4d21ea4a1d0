# cython: language_level=3
"""Compiled kernels for ensemble averaging and spherical polygon areas.

Signatures and semantics match ``_pure.py`` exactly; the test suite
asserts parity between the two backends.  Accumulations are
Kahan-compensated so that a 1e6-sample ensemble still satisfies the
trace tolerance of the density-matrix type.
"""

from libc.math cimport atan2, cos, sin

import numpy as np

cimport numpy as cnp

cnp.import_array()


def ensemble_projector_mean(object thetas):
    """See ``_pure.ensemble_projector_mean``."""
    cdef cnp.ndarray[cnp.float64_t, ndim=1] t = np.ascontiguousarray(
        thetas, dtype=np.float64)
    cdef Py_ssize_t n = t.shape[0]
    if n == 0:
        raise ValueError("thetas must be a nonempty 1-d array")
    cdef double s00 = 0.0, k00 = 0.0
    cdef double s01 = 0.0, k01 = 0.0
    cdef double s11 = 0.0, k11 = 0.0
    cdef double ct, st, y, acc
    cdef Py_ssize_t i
    for i in range(n):
        ct = cos(t[i])
        st = sin(t[i])
        y = ct * ct - k00
        acc = s00 + y
        k00 = (acc - s00) - y
        s00 = acc
        y = ct * st - k01
        acc = s01 + y
        k01 = (acc - s01) - y
        s01 = acc
        y = st * st - k11
        acc = s11 + y
        k11 = (acc - s11) - y
        s11 = acc
    return s00 / n, s01 / n, s11 / n


def spherical_polygon_area(object vertices):
    """See ``_pure.spherical_polygon_area``."""
    cdef cnp.ndarray[cnp.float64_t, ndim=2] v = np.ascontiguousarray(
        vertices, dtype=np.float64)
    if v.shape[1] != 3 or v.shape[0] < 3:
        raise ValueError("vertices must have shape (n >= 3, 3)")
    cdef Py_ssize_t n = v.shape[0]
    cdef double ax = v[0, 0], ay = v[0, 1], az = v[0, 2]
    cdef double bx, by, bz, cx, cy, cz
    cdef double crx, cry, crz, num, den, term
    cdef double total = 0.0, comp = 0.0, y, acc
    cdef Py_ssize_t i
    for i in range(1, n - 1):
        bx = v[i, 0]
        by = v[i, 1]
        bz = v[i, 2]
        cx = v[i + 1, 0]
        cy = v[i + 1, 1]
        cz = v[i + 1, 2]
        crx = by * cz - bz * cy
        cry = bz * cx - bx * cz
        crz = bx * cy - by * cx
        num = ax * crx + ay * cry + az * crz
        den = 1.0 + (ax * bx + ay * by + az * bz) \
                  + (bx * cx + by * cy + bz * cz) \
                  + (cx * ax + cy * ay + cz * az)
        term = 2.0 * atan2(num, den)
        y = term - comp
        acc = total + y
        comp = (acc - total) - y
        total = acc
    return total
