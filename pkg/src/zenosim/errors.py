"""Exception types shared across the package.

Two families matter for the command-line surface: ``InputError`` (malformed
configuration or data files, CLI exit code 2) and ``DomainError`` (physically
invalid parameter regimes or statistics, CLI exit code 3).
"""


class ZenoSimError(Exception):
    """Base class for all package-specific errors."""


class DomainError(ZenoSimError):
    """A physics- or statistics-domain precondition was violated."""


class InputError(ZenoSimError):
    """A configuration or data file could not be parsed or validated."""


# -- driven two-level dynamics -------------------------------------------

class OverdampedRegime(DomainError):
    """Relaxation dominates the drive: the nutation angle would be imaginary."""


class NonResonant(DomainError):
    """A resonance-only operation was called with nonzero detuning."""


class InvalidProbability(DomainError):
    """A computed probability fell outside [0, 1] beyond tolerance."""


class IntegrationFailure(DomainError):
    """The adaptive ODE integrator could not meet its error tolerance."""


class NegativeVariance(DomainError):
    """Phase-diffusion variance would be negative for these inputs."""


# -- trajectory generation -----------------------------------------------

class CoherentModeRequiresNoRelaxation(DomainError):
    """The uninterrupted-coherent generator is defined only without relaxation."""


# -- run statistics -------------------------------------------------------

class NoOnEvents(DomainError):
    """The transition-probability estimator needs at least one 'on' outcome."""


class NoUnitRuns(DomainError):
    """Normalized ratios need at least one run of length 1."""


class DegenerateModels(DomainError):
    """The two candidate models predict identical run-length statistics."""


class ZeroLikelihoodBothModels(DomainError):
    """The observed runs are impossible under both candidate models."""


# -- fitting ---------------------------------------------------------------

class InfeasibleContrast(DomainError):
    """Modulation contrast cannot be inverted to relaxation parameters."""


class NonConvergence(DomainError):
    """Local refinement exceeded its iteration cap."""


class DataTooSparse(DomainError):
    """Too few distinct run lengths to constrain the fit."""


# -- calibration ------------------------------------------------------------

class NoPositiveCandidate(DomainError):
    """No branch of the nutation-increment inversion yields a positive angle."""


# -- files -------------------------------------------------------------------

class ConfigError(InputError):
    """Configuration file is missing keys or holds unparseable values."""


class TrajectoryFormatError(InputError):
    """Trajectory file violates the line format."""
