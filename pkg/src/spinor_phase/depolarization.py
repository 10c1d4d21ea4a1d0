"""Stochastic depolarization at the first coil, plus Bloch tomography.

Mixed states are prepared the way the instrument prepares them: every
neutron sees the first coil with a random angle offset, and the beam
density matrix is the ensemble average of the resulting pure states.
For offset distributions symmetric about zero the average Bloch vector
stays on the -y axis and only shortens, so the offset amplitude dials
the purity.

The offset distributions are uniform (half-width A), gaussian (standard
deviation sigma), or an explicit discrete set; each neutron draws one
independent offset.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import bisect

from . import _kernels
from .errors import DomainError, UnsupportedNoiseError
from .su2 import (
    ATOL,
    DensityMatrix,
    SpinOperator,
    SU2Params,
    apply_to_density,
    purity,
    su2_from_params,
)

__all__ = [
    "NOISE_KINDS",
    "NoiseModel",
    "EnsembleState",
    "TomographyEstimate",
    "sample_offsets",
    "noisy_first_coil_ensemble",
    "analytic_purity",
    "solve_noise_for_purity",
    "bloch_tomography",
]

NOISE_KINDS = ("uniform", "gaussian", "discrete")


@dataclass(frozen=True)
class NoiseModel:
    """Distribution of the first-coil angle offsets.

    ``amplitude`` is the half-width for ``uniform`` and the standard
    deviation for ``gaussian``; ``offsets`` is the support of a
    ``discrete`` model and must be symmetric about zero as a multiset.
    Asymmetric distributions would tilt the prepared state off the -y
    axis and are rejected rather than silently accepted.
    """

    kind: str
    amplitude: float = 0.0
    offsets: tuple[float, ...] = ()
    seed: int = 0

    def __post_init__(self) -> None:
        if self.kind not in NOISE_KINDS:
            raise UnsupportedNoiseError(
                f"unknown noise kind {self.kind!r}; expected one of {NOISE_KINDS}"
            )
        amplitude = float(self.amplitude)
        if not (math.isfinite(amplitude) and amplitude >= 0.0):
            raise DomainError(f"amplitude must be finite and >= 0, got {self.amplitude!r}")
        object.__setattr__(self, "amplitude", amplitude)
        offsets = tuple(float(x) for x in self.offsets)
        if self.kind == "discrete":
            if not offsets:
                raise DomainError("discrete noise model needs a nonempty offset set")
            if not all(math.isfinite(x) for x in offsets):
                raise DomainError("offsets must be finite")
            ordered = sorted(offsets)
            if any(abs(lo + hi) > ATOL for lo, hi in zip(ordered, reversed(ordered))):
                raise UnsupportedNoiseError(
                    "discrete offsets must be symmetric about 0 as a multiset"
                )
        elif offsets:
            raise DomainError(f"offsets are only meaningful for discrete models, got {offsets!r}")
        object.__setattr__(self, "offsets", offsets)
        object.__setattr__(self, "seed", int(self.seed))


@dataclass(frozen=True)
class EnsembleState:
    """Result of averaging a noisy-coil ensemble."""

    rho: DensityMatrix
    n_samples: int
    r0: float

    def __post_init__(self) -> None:
        if self.n_samples < 1:
            raise DomainError("n_samples must be >= 1")
        if abs(self.r0 - purity(self.rho)) > ATOL:
            raise DomainError("r0 must equal the Bloch length of rho")
        if self.r0 > 1.0 + ATOL:
            raise DomainError("r0 cannot exceed 1")


@dataclass(frozen=True)
class TomographyEstimate:
    """Estimated Bloch components with per-axis counting uncertainties.

    Deliberately not a BlochVector: the estimator is unbiased, so a
    near-pure state can legitimately yield |r| slightly above 1.
    """

    rx: float
    ry: float
    rz: float
    sigma_rx: float
    sigma_ry: float
    sigma_rz: float

    @property
    def r0(self) -> float:
        return math.hypot(self.rx, self.ry, self.rz)


def sample_offsets(noise: NoiseModel, n: int, rng: np.random.Generator | None = None) -> np.ndarray:
    """Draw n i.i.d. offsets from the model's distribution."""
    if n < 1:
        raise DomainError("need at least one sample")
    if rng is None:
        rng = np.random.default_rng(noise.seed)
    if noise.kind == "uniform":
        return rng.uniform(-noise.amplitude, noise.amplitude, n)
    if noise.kind == "gaussian":
        return rng.normal(0.0, noise.amplitude, n)
    return rng.choice(np.asarray(noise.offsets, dtype=np.float64), size=n)


def _noisy_coil(offset: float) -> SpinOperator:
    """First coil with its rotation angle perturbed: U(pi/4 + offset, 0, -pi/2)."""
    return su2_from_params(SU2Params(math.pi / 4.0 + offset, 0.0, -math.pi / 2.0))


def noisy_first_coil_ensemble(
    noise: NoiseModel, n: int, rng: np.random.Generator | None = None
) -> EnsembleState:
    """Average U(pi/4 + d, 0, -pi/2)|+> over n draws of the offset d.

    Each sample is the pure state (cos(pi/4 + d), -i sin(pi/4 + d)), so
    every sample lies in the y-z plane and the ensemble Bloch vector has
    rx = 0 exactly.  The heavy averaging loop runs in the selected
    numerical kernel backend.
    """
    offsets = sample_offsets(noise, n, rng)
    m00, cross, m11 = _kernels.ensemble_projector_mean(math.pi / 4.0 + offsets)
    rho = DensityMatrix(
        np.array([[m00, 1j * cross], [-1j * cross, m11]], dtype=np.complex128)
    )
    return EnsembleState(rho=rho, n_samples=int(n), r0=purity(rho))


def analytic_purity(noise: NoiseModel) -> float:
    """E[cos(2 * offset)]: the exact Bloch length the ensemble converges to.

    uniform on [-A, A] -> sin(2A)/(2A); gaussian sigma -> exp(-2 sigma^2);
    discrete -> the plain average of cos(2 * offset) over the set.
    """
    if noise.kind == "uniform":
        a = 2.0 * noise.amplitude
        return 1.0 if a == 0.0 else math.sin(a) / a
    if noise.kind == "gaussian":
        return math.exp(-2.0 * noise.amplitude**2)
    return float(np.mean(np.cos(2.0 * np.asarray(noise.offsets, dtype=np.float64))))


def solve_noise_for_purity(target_r0: float, kind: str = "uniform", seed: int = 0) -> NoiseModel:
    """Find a noise model whose analytic purity equals ``target_r0``.

    For the continuous families the amplitude is located by bisection;
    a discrete model is the two-point set {+d, -d} with cos(2d) equal to
    the target.  Targets must lie in (0, 1] except for discrete models,
    which reach 0 with the set {+pi/4, -pi/4}.
    """
    if kind not in NOISE_KINDS:
        raise UnsupportedNoiseError(f"unknown noise kind {kind!r}; expected one of {NOISE_KINDS}")
    if not math.isfinite(target_r0) or target_r0 < 0.0 or target_r0 > 1.0:
        raise DomainError(f"target purity must lie in [0, 1], got {target_r0!r}")
    if kind == "discrete":
        half = math.acos(max(-1.0, min(1.0, target_r0))) / 2.0
        return NoiseModel(kind="discrete", offsets=(half, -half), seed=seed)
    if target_r0 == 0.0:
        raise DomainError(
            f"purity 0 is out of range for the {kind} family; use a discrete model"
        )
    if target_r0 == 1.0:
        return NoiseModel(kind=kind, amplitude=0.0, seed=seed)

    def residual(amplitude: float) -> float:
        return analytic_purity(NoiseModel(kind=kind, amplitude=amplitude, seed=seed)) - target_r0

    if kind == "uniform":
        hi = math.pi / 2.0
    else:
        hi = 1.0
        while residual(hi) > 0.0:
            hi *= 2.0
    amplitude = bisect(residual, 0.0, hi, xtol=1e-14)
    return NoiseModel(kind=kind, amplitude=float(amplitude), seed=seed)


_AXIS_PREROTATIONS: dict[str, SpinOperator | None] = {
    # Rotations taking the measurement axis onto +z, after which the
    # analyzer projection on |+> reads out that Pauli expectation.
    "x": su2_from_params(SU2Params(math.pi / 4.0, 0.0, math.pi)),
    "y": su2_from_params(SU2Params(math.pi / 4.0, 0.0, -math.pi / 2.0)),
    "z": None,
}


def bloch_tomography(
    rho: DensityMatrix, counts_scale: float, seed: int = 0
) -> TomographyEstimate:
    """Estimate the Bloch vector from three projective measurements.

    For each axis the state is pre-rotated so that axis lands on +z, and
    a pair of Poisson counts with expectations ``counts_scale * p`` and
    ``counts_scale * (1 - p)`` is drawn for the two analyzer outputs.
    The count asymmetry (N+ - N-) / (N+ + N-) estimates the component
    without bias; its uncertainty is first-order Poisson propagation.
    ``counts_scale = 0`` skips the fluctuation and reads the exact
    expectations with zero uncertainty.
    """
    if not (math.isfinite(counts_scale) and counts_scale >= 0.0):
        raise DomainError(f"counts_scale must be finite and >= 0, got {counts_scale!r}")
    rng = np.random.default_rng(seed)
    values: dict[str, tuple[float, float]] = {}
    for axis in ("x", "y", "z"):
        rot = _AXIS_PREROTATIONS[axis]
        rotated = rho if rot is None else apply_to_density(rot, rho)
        p = min(1.0, max(0.0, float(rotated.matrix[0, 0].real)))
        if counts_scale == 0.0:
            values[axis] = (2.0 * p - 1.0, 0.0)
            continue
        n_plus = int(rng.poisson(counts_scale * p))
        n_minus = int(rng.poisson(counts_scale * (1.0 - p)))
        total = n_plus + n_minus
        if total == 0:
            values[axis] = (0.0, math.inf)
            continue
        estimate = (n_plus - n_minus) / total
        sigma = 2.0 * math.sqrt(max(n_plus, 1) * max(n_minus, 1)) / total**1.5
        values[axis] = (estimate, sigma)
    (rx, sx), (ry, sy), (rz, sz) = values["x"], values["y"], values["z"]
    return TomographyEstimate(rx=rx, ry=ry, rz=rz, sigma_rx=sx, sigma_ry=sy, sigma_rz=sz)
