"""The five-element polarimeter evolution and its detected intensity.

A beam polarized along +z with degree of polarization ``r0_prime``
traverses, in order: a +pi/2 coil rotation U1 about +x, a
translation-controlled precession U_eta, the central evolution
U_phi = U(xi, delta, zeta), the inverse translation precession, and the
inverse coil; the analyzer then projects on ``|+>``.  The detected
intensity admits the closed form::

    I = (1 - r0')/2 + r0' * (cos^2(xi) cos^2(delta) + sin^2(xi) cos^2(zeta - eta))

and :func:`intensity_matrix` must reproduce it to :data:`~spinor_phase.su2.ATOL`
by explicit operator propagation.  That equivalence is the module's
central test surface.

Sign convention for eta: the translation stage is modeled as
``U(0, -eta/2)``, i.e. the Bloch azimuth gains +eta.  The opposite
choice merely relabels ``zeta - eta`` as ``zeta + eta`` in the fringe,
which no intensity can distinguish; the one used here is what makes the
closed form above hold verbatim alongside this package's precession
sense.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from .errors import DomainError
from .su2 import (
    BlochVector,
    DensityMatrix,
    SpinOperator,
    SU2Params,
    adjoint,
    apply_to_density,
    compose,
    density_from_bloch,
    su2_from_params,
)

__all__ = [
    "FIRST_COIL",
    "BeamlineConfig",
    "second_coil",
    "z_precession",
    "eta_shift",
    "input_state",
    "central_evolution",
    "evolution_operator",
    "intensity_matrix",
    "intensity_closed_form",
    "fringe_profile",
    "compose_coil_and_precession",
]

FIRST_COIL = su2_from_params(SU2Params(math.pi / 4.0, 0.0, -math.pi / 2.0))
"""U1 = U(pi/4, 0, -pi/2): the +pi/2 rotation about +x shared by every run."""


def second_coil(xi: float) -> SpinOperator:
    """Coil rotation U(xi, 0, -pi/2): a 2*xi rotation about +x."""
    return su2_from_params(SU2Params(xi, 0.0, -math.pi / 2.0))


def z_precession(delta: float) -> SpinOperator:
    """Free precession about +z by 2*delta: U(0, delta)."""
    return su2_from_params(SU2Params(0.0, delta))


def eta_shift(eta: float) -> SpinOperator:
    """Translation-stage precession U_eta, modeled as U(0, -eta/2)."""
    return su2_from_params(SU2Params(0.0, -eta / 2.0))


@dataclass(frozen=True)
class BeamlineConfig:
    """One polarimeter setting.

    ``xi`` is half the second-coil rotation (coil angle 2*xi), ``delta``
    half the z precession (precession angle 2*delta), ``zeta`` the
    azimuthal SU(2) parameter of the central evolution, and ``eta`` the
    auxiliary dynamical shift from translating the second coil.
    """

    r0_prime: float
    xi: float
    delta: float
    zeta: float
    eta: float = 0.0

    def __post_init__(self) -> None:
        r0 = float(self.r0_prime)
        if not (math.isfinite(r0) and 0.0 <= r0 <= 1.0):
            raise DomainError(f"r0_prime must lie in [0, 1], got {self.r0_prime!r}")
        object.__setattr__(self, "r0_prime", r0)
        for name in ("xi", "delta", "zeta", "eta"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise DomainError(f"BeamlineConfig.{name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)


def input_state(r0_prime: float) -> DensityMatrix:
    """Partially polarized incident state (1 + r0' sigma_z)/2."""
    return density_from_bloch(BlochVector(0.0, 0.0, r0_prime))


def central_evolution(config: BeamlineConfig) -> SpinOperator:
    """U_phi = U(xi, delta, zeta)."""
    return su2_from_params(SU2Params(config.xi, config.delta, config.zeta))


def evolution_operator(config: BeamlineConfig) -> SpinOperator:
    """The full sandwich V = U1^dag U_eta^dag U_phi U_eta U1.

    The rightmost factor acts first, so reading right to left follows
    the beam through the instrument.
    """
    u_eta = eta_shift(config.eta)
    forward = compose(central_evolution(config), compose(u_eta, FIRST_COIL))
    return compose(adjoint(FIRST_COIL), compose(adjoint(u_eta), forward))


def intensity_matrix(config: BeamlineConfig) -> float:
    """Detection probability Tr(|+><+| V rho_in V^dag) by explicit propagation."""
    rho_out = apply_to_density(evolution_operator(config), input_state(config.r0_prime))
    return float(rho_out.matrix[0, 0].real)


def intensity_closed_form(config: BeamlineConfig) -> float:
    """The closed-form intensity quoted in the module docstring.

    The proportionality constant is fixed to 1, making the value the
    detection probability outright: the U_phi = identity configuration
    then gives I0 = (1 + r0')/2, which is what normalizes fringe scans.
    """
    r0 = config.r0_prime
    cos_xi_sq = math.cos(config.xi) ** 2
    cos_delta_sq = math.cos(config.delta) ** 2
    cos_lag_sq = math.cos(config.zeta - config.eta) ** 2
    return (1.0 - r0) / 2.0 + r0 * (cos_xi_sq * cos_delta_sq + (1.0 - cos_xi_sq) * cos_lag_sq)


def fringe_profile(config: BeamlineConfig, eta_grid: object) -> NDArray[np.float64]:
    """Closed-form intensity over an array of eta values (vectorized).

    The ``eta`` field of ``config`` is ignored; the grid supplies it.
    """
    eta = np.asarray(eta_grid, dtype=np.float64)
    r0 = config.r0_prime
    cos_xi_sq = math.cos(config.xi) ** 2
    cos_delta_sq = math.cos(config.delta) ** 2
    cos_lag_sq = np.cos(config.zeta - eta) ** 2
    return (1.0 - r0) / 2.0 + r0 * (cos_xi_sq * cos_delta_sq + (1.0 - cos_xi_sq) * cos_lag_sq)


def compose_coil_and_precession(xi: float, delta: float) -> SU2Params:
    """Parameters of the central evolution built from its two ingredients.

    A 2*delta precession about +z entering a 2*xi coil combine into
    ``U(xi, delta, delta - pi/2)``: the product
    ``compose(second_coil(xi), z_precession(delta))`` reproduces
    ``su2_from_params`` of the returned triple exactly, which the test
    suite pins.  Only ``zeta`` remembers the ordering; every intensity is
    even in ``zeta - eta``, so observables do not.
    """
    if not (math.isfinite(xi) and math.isfinite(delta)):
        raise DomainError("angles must be finite")
    return SU2Params(xi, delta, delta - math.pi / 2.0)
