"""Spin-1/2 states and SU(2) evolution operators.

This module is the algebraic bedrock of the package: a three-angle
parameterization of SU(2), spinors and density matrices for a single
spin-1/2, and conversions to and from the Bloch-vector picture.

Conventions
-----------
Basis index 0 is ``|+>`` (spin up along +z) and index 1 is ``|->``.
An operator is built from three angles as::

    U(xi, delta, zeta) = [[ e^{+i delta} cos(xi),  -e^{-i zeta} sin(xi)],
                          [ e^{+i zeta}  sin(xi),   e^{-i delta} cos(xi)]]

so the Cayley-Klein parameters are ``a = e^{i delta} cos(xi)`` and
``b = -e^{-i zeta} sin(xi)``.  Two anchor facts fix every rotation sense
used by the rest of the package:

* ``U(pi/4, 0, -pi/2)`` is the +pi/2 rotation about the +x axis; it maps
  the north pole of the Bloch sphere onto the -y axis.
* For ``xi < pi/2`` the diagonal phase is observable as
  ``arg <+|U|+> = +delta``.

A derived consequence, pinned by the test suite: ``U(0, delta)``
precesses the Bloch vector about +z so that the azimuthal angle
*decreases* by ``2*delta``.  The ``zeta`` angle of an ``xi = 0`` operator
multiplies a vanishing matrix entry and is therefore accepted and
ignored rather than rejected.

All types here are immutable values and all operations are pure
functions, so everything is safe to share across threads.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from .errors import DomainError, UndefinedPhaseError

__all__ = [
    "ATOL",
    "SU2Params",
    "SpinOperator",
    "Spinor",
    "DensityMatrix",
    "BlochVector",
    "SPIN_UP",
    "SPIN_DOWN",
    "su2_from_params",
    "cayley_klein",
    "compose",
    "adjoint",
    "apply_to_density",
    "bloch_vector",
    "density_from_bloch",
    "purity",
    "total_pure_phase",
]

ATOL = 1e-12
"""Library-wide absolute tolerance for algebraic identities on doubles.

Comfortably above the rounding error accumulated by operator chains of
depth below a few hundred, and far below any physically meaningful
deviation.
"""


def _as_matrix(values: object) -> NDArray[np.complex128]:
    m = np.array(values, dtype=np.complex128)
    if m.shape != (2, 2):
        raise DomainError(f"expected a 2x2 matrix, got shape {m.shape}")
    if not np.isfinite(m).all():
        raise DomainError("matrix entries must be finite")
    m.setflags(write=False)
    return m


@dataclass(frozen=True)
class SU2Params:
    """Angle triple (xi, delta, zeta) naming an SU(2) operator."""

    xi: float
    delta: float
    zeta: float = 0.0

    def __post_init__(self) -> None:
        for name in ("xi", "delta", "zeta"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise DomainError(f"SU2Params.{name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)


@dataclass(frozen=True, eq=False)
class SpinOperator:
    """A 2x2 special-unitary matrix, the only evolution primitive.

    Validation happens on construction: rows must be orthonormal and the
    determinant must equal 1, both within :data:`ATOL`, so every value of
    this type is a genuine SU(2) element.  The wrapped array is read-only.
    """

    matrix: NDArray[np.complex128]

    def __post_init__(self) -> None:
        m = _as_matrix(self.matrix)
        a, b = complex(m[0, 0]), complex(m[0, 1])
        c, d = complex(m[1, 0]), complex(m[1, 1])
        # Entrywise |U U^dag - 1|; the [1,0] entry is the conjugate of [0,1].
        defect = max(
            abs(a.real * a.real + a.imag * a.imag + b.real * b.real + b.imag * b.imag - 1.0),
            abs(c.real * c.real + c.imag * c.imag + d.real * d.real + d.imag * d.imag - 1.0),
            abs(a * c.conjugate() + b * d.conjugate()),
        )
        if defect > ATOL:
            raise DomainError(f"matrix is not unitary within {ATOL:g} (defect {defect:.3e})")
        det = a * d - b * c
        if abs(det - 1.0) > ATOL:
            raise DomainError(f"determinant must be 1 within {ATOL:g}, got {det}")
        object.__setattr__(self, "matrix", m)


@dataclass(frozen=True)
class Spinor:
    """Normalized pure state ``up * |+> + down * |->``."""

    up: complex
    down: complex

    def __post_init__(self) -> None:
        up, down = complex(self.up), complex(self.down)
        if not (cmath.isfinite(up) and cmath.isfinite(down)):
            raise DomainError("spinor components must be finite")
        norm_sq = up.real * up.real + up.imag * up.imag + down.real * down.real + down.imag * down.imag
        if abs(norm_sq - 1.0) > ATOL:
            raise DomainError(f"spinor is not normalized: |psi|^2 = {norm_sq!r}")
        object.__setattr__(self, "up", up)
        object.__setattr__(self, "down", down)

    @property
    def vector(self) -> NDArray[np.complex128]:
        return np.array([self.up, self.down], dtype=np.complex128)

    def density(self) -> DensityMatrix:
        """Projector |psi><psi| as a density matrix."""
        v = self.vector
        return DensityMatrix(np.outer(v, v.conj()))


SPIN_UP = Spinor(1.0, 0.0)
SPIN_DOWN = Spinor(0.0, 1.0)


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """2x2 density operator: Hermitian, unit trace, positive semidefinite.

    Positivity uses the closed form for 2x2 Hermitian matrices: both
    eigenvalues are nonnegative iff the trace and determinant are.  The
    determinant may undershoot zero by :data:`ATOL` to absorb roundoff
    from operator chains.
    """

    matrix: NDArray[np.complex128]

    def __post_init__(self) -> None:
        m = _as_matrix(self.matrix)
        p, q = complex(m[0, 0]), complex(m[0, 1])
        r, s = complex(m[1, 0]), complex(m[1, 1])
        herm = max(abs(p.imag), abs(s.imag), abs(q - r.conjugate()))
        if herm > ATOL:
            raise DomainError(f"matrix is not Hermitian within {ATOL:g} (defect {herm:.3e})")
        trace = p.real + s.real
        if abs(trace - 1.0) > ATOL:
            raise DomainError(f"trace must be 1 within {ATOL:g}, got {trace!r}")
        det = (p * s - q * r).real
        if trace < 0.0 or det < -ATOL:
            raise DomainError(f"matrix is not positive semidefinite (det {det:.3e})")
        object.__setattr__(self, "matrix", m)

    @staticmethod
    def maximally_mixed() -> DensityMatrix:
        return DensityMatrix(np.eye(2, dtype=np.complex128) / 2.0)


@dataclass(frozen=True)
class BlochVector:
    """Real polarization vector (rx, ry, rz) with |r| <= 1.

    The small slack on the unit-ball bound absorbs roundoff; genuinely
    superunitary vectors are rejected because no density matrix exists
    for them.
    """

    rx: float
    ry: float
    rz: float

    def __post_init__(self) -> None:
        for name in ("rx", "ry", "rz"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise DomainError(f"BlochVector.{name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)
        if self.norm > 1.0 + ATOL:
            raise DomainError(f"Bloch vector length {self.norm!r} exceeds 1")

    @property
    def norm(self) -> float:
        return math.hypot(self.rx, self.ry, self.rz)

    def as_array(self) -> NDArray[np.float64]:
        return np.array([self.rx, self.ry, self.rz])


def su2_from_params(params: SU2Params) -> SpinOperator:
    """Build U(xi, delta, zeta); see the module docstring for the matrix."""
    cos_xi = math.cos(params.xi)
    sin_xi = math.sin(params.xi)
    ed = cmath.exp(1j * params.delta)
    ez = cmath.exp(1j * params.zeta)
    return SpinOperator(
        np.array(
            [
                [ed * cos_xi, -ez.conjugate() * sin_xi],
                [ez * sin_xi, ed.conjugate() * cos_xi],
            ],
            dtype=np.complex128,
        )
    )


def cayley_klein(u: SpinOperator) -> tuple[complex, complex]:
    """The (a, b) pair: top row of the operator matrix."""
    return complex(u.matrix[0, 0]), complex(u.matrix[0, 1])


def compose(u: SpinOperator, v: SpinOperator) -> SpinOperator:
    """Operator product ``u @ v`` (v acts first)."""
    return SpinOperator(u.matrix @ v.matrix)


def adjoint(u: SpinOperator) -> SpinOperator:
    """Conjugate transpose, the inverse evolution."""
    return SpinOperator(u.matrix.conj().T)


def apply_to_density(u: SpinOperator, rho: DensityMatrix) -> DensityMatrix:
    """Conjugation ``U rho U^dag``; preserves all density-matrix invariants."""
    return DensityMatrix(u.matrix @ rho.matrix @ u.matrix.conj().T)


def bloch_vector(rho: DensityMatrix) -> BlochVector:
    """Pauli expectation values (rx, ry, rz) of the state."""
    m = rho.matrix
    off = complex(m[0, 1])
    return BlochVector(2.0 * off.real, -2.0 * off.imag, float((m[0, 0] - m[1, 1]).real))


def density_from_bloch(r: BlochVector) -> DensityMatrix:
    """The state (1 + r . sigma)/2; inverse of :func:`bloch_vector`."""
    return DensityMatrix(
        np.array(
            [
                [(1.0 + r.rz) / 2.0, (r.rx - 1j * r.ry) / 2.0],
                [(r.rx + 1j * r.ry) / 2.0, (1.0 - r.rz) / 2.0],
            ],
            dtype=np.complex128,
        )
    )


def purity(rho: DensityMatrix) -> float:
    """Degree of polarization |r|: 1 for pure states, 0 when maximally mixed."""
    return bloch_vector(rho).norm


def total_pure_phase(u: SpinOperator, psi: Spinor) -> float:
    """Total phase ``arg <psi|U|psi>`` acquired by a pure state, in (-pi, pi].

    Raises
    ------
    UndefinedPhaseError
        If the transition amplitude magnitude is below :data:`ATOL`
        (final state orthogonal to the initial one): no phase exists.
    """
    v = psi.vector
    amp = complex(v.conj() @ (u.matrix @ v))
    if abs(amp) < ATOL:
        raise UndefinedPhaseError(
            f"transition amplitude {abs(amp):.3e} is below {ATOL:g}; total phase undefined"
        )
    phase = cmath.phase(amp)
    if phase <= -math.pi:
        phase += 2.0 * math.pi
    return phase
