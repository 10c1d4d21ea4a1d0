"""Exception hierarchy for the spinor_phase package.

Everything raised on purpose by this package derives from
:class:`SpinorPhaseError`, so callers can catch one type at the top of a
script.  Numerical guards (normalization, positivity, branch domains)
raise the more specific subclasses below.
"""


class SpinorPhaseError(Exception):
    """Base class for all errors raised by spinor_phase."""


class DomainError(SpinorPhaseError, ValueError):
    """An input is outside the mathematical domain of an operation.

    Examples: a non-normalizable state, a density matrix with a negative
    eigenvalue, a purity target that the requested noise family cannot
    reach, or a non-finite angle.
    """


class UndefinedPhaseError(SpinorPhaseError, ArithmeticError):
    """A phase was requested where it does not exist.

    Raised when the transition amplitude whose argument defines the phase
    has magnitude below tolerance (orthogonal initial and final states).
    """


class InconsistentIntensityError(SpinorPhaseError, ValueError):
    """Measured oscillation extrema are incompatible with the stated purity.

    The phase-extraction formula takes a square root of a ratio built from
    i_max, i_min and r0.  Statistical noise may push that radicand slightly
    outside [0, 1]; small excursions are clamped and flagged, but a radicand
    far outside the window means the inputs are not a fringe of the assumed
    model and no phase is reported.
    """


class UnsupportedNoiseError(SpinorPhaseError, ValueError):
    """The requested noise family is not one this package implements."""


class ConfigError(SpinorPhaseError, ValueError):
    """A configuration file or command-line value could not be used."""
