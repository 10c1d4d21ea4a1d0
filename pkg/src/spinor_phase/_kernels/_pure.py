"""NumPy fallback implementations of the hot numerical kernels.

These mirror the Cython versions in ``_native.pyx`` one to one; the
package behaves identically (only slower) when the compiled extension is
unavailable.
"""

from __future__ import annotations

import numpy as np


def ensemble_projector_mean(thetas: np.ndarray) -> tuple[float, float, float]:
    """Average the projectors of the states (cos t, -i sin t) over ``thetas``.

    Returns ``(m00, cross, m11)`` where the mean density matrix is
    ``[[m00, i*cross], [-i*cross, m11]]``; keeping the off-diagonal as an
    explicitly imaginary number makes the x component of the mean Bloch
    vector vanish by construction.
    """
    t = np.asarray(thetas, dtype=np.float64)
    if t.ndim != 1 or t.size == 0:
        raise ValueError("thetas must be a nonempty 1-d array")
    c = np.cos(t)
    s = np.sin(t)
    return float(np.mean(c * c)), float(np.mean(c * s)), float(np.mean(s * s))


def spherical_polygon_area(vertices: np.ndarray) -> float:
    """Signed solid angle of the spherical polygon through ``vertices``.

    ``vertices`` is an (n, 3) array of unit vectors; consecutive ones are
    joined by geodesic arcs and the polygon closes back to the first.
    Uses a triangle fan from vertex 0 with the two-argument arctangent
    form of the spherical excess, which is numerically stable for thin
    triangles.  Positive sign corresponds to counterclockwise traversal
    seen from outside the sphere.
    """
    v = np.ascontiguousarray(vertices, dtype=np.float64)
    if v.ndim != 2 or v.shape[1] != 3 or v.shape[0] < 3:
        raise ValueError("vertices must have shape (n >= 3, 3)")
    a = v[0]
    b = v[1:-1]
    c = v[2:]
    num = np.cross(b, c) @ a
    den = 1.0 + b @ a + np.einsum("ij,ij->i", b, c) + c @ a
    return float(np.sum(2.0 * np.arctan2(num, den)))
