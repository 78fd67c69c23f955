"""Synthetic measurement records under the two rival generative models.

A record is a sequence of binary probe outcomes: 'on' (resonance
fluorescence seen, ion in the ground state) or 'off' (dark, ion in the
metastable state).  The state-reduction ("Zeno") generator is a two-state
Markov chain whose stay probabilities are the per-pulse survival
probabilities; the uninterrupted-coherent generator instead draws maximal
run lengths from the survival law V(q) = cos^2(q*omega*tau/2).

Randomness comes from a counter-based Philox (4x64) bit generator keyed
directly by the 64-bit trajectory seed, consuming exactly one uniform
draw per measurement index.  Identical (seed, model, parameters) always
reproduce the identical record; distinct seeds give independent streams,
so batches parallelize trivially.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .bloch import DegeneracyFactors, DriveParams, RelaxationParams, survival_probability
from .errors import CoherentModeRequiresNoRelaxation

GENERATOR_NAME = "philox4x64-onedraw-v1"

# cos^2 values below this are exact-node round-off (e.g. cos(pi/2)^2 ~ 4e-33)
# and are treated as true zeros of the coherent survival law.
NODE_EPS = 1e-24


class MeasurementOutcome(enum.Enum):
    ON = "on"
    OFF = "off"

    @property
    def token(self) -> str:
        return self.value


class GeneratorModel(enum.Enum):
    ZENO = "zeno"
    COHERENT = "coherent"


@dataclass(frozen=True)
class ExperimentConfig:
    """Physical settings of one simulated experiment.

    ``probe_duration`` is carried for record fidelity only; the probe is
    modeled as a perfect projective readout regardless of its length.
    """

    drive: DriveParams
    relax: RelaxationParams
    degeneracy: DegeneracyFactors
    probe_duration: float
    n_measurements: int

    def __post_init__(self) -> None:
        if self.n_measurements < 1:
            raise ValueError(
                f"n_measurements must be >= 1, got {self.n_measurements}"
            )
        if self.probe_duration < 0:
            raise ValueError(
                f"probe_duration must be >= 0, got {self.probe_duration}"
            )


@dataclass(frozen=True)
class Trajectory:
    """An ordered record of probe outcomes plus its provenance.

    ``outcomes`` is a read-only boolean array, True = 'on'.
    """

    seed: int
    model: GeneratorModel
    outcomes: np.ndarray

    def __post_init__(self) -> None:
        arr = np.asarray(self.outcomes, dtype=bool)
        arr.flags.writeable = False
        object.__setattr__(self, "outcomes", arr)
        if arr.ndim != 1 or arr.size < 1:
            raise ValueError("outcomes must be a non-empty 1-D sequence")

    def __len__(self) -> int:
        return int(self.outcomes.size)

    def outcome_list(self) -> list[MeasurementOutcome]:
        return [
            MeasurementOutcome.ON if o else MeasurementOutcome.OFF
            for o in self.outcomes
        ]


def _keyed_draws(seed: int, n: int) -> np.ndarray:
    """n uniform [0, 1) draws from a Philox stream keyed by ``seed``."""
    if not 0 <= seed < 2**64:
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
    rng = np.random.Generator(np.random.Philox(key=seed))
    return rng.random(n)


def zeno_step(
    current: MeasurementOutcome,
    p0: float,
    p1: float,
    rng_draw: float,
) -> MeasurementOutcome:
    """One Markov step of the state-reduction chain.

    From 'on' the outcome repeats with probability ``p0``; from 'off'
    with probability ``p1``.  ``rng_draw`` is a uniform [0, 1) variate;
    the step stays when ``rng_draw < p_stay``.
    """
    if not 0.0 <= p0 <= 1.0 or not 0.0 <= p1 <= 1.0:
        raise ValueError(f"stay probabilities must be in [0, 1], got {p0}, {p1}")
    stay = rng_draw < (p0 if current is MeasurementOutcome.ON else p1)
    if stay:
        return current
    return (
        MeasurementOutcome.OFF
        if current is MeasurementOutcome.ON
        else MeasurementOutcome.ON
    )


def stationary_on_probability(p0: float, p1: float) -> float:
    """Stationary probability of 'on' for the two-state chain.

    When both stay probabilities equal 1 the chain never moves and any
    distribution is stationary; the convention here is to start 'on',
    matching the prepared start of the coherent generator.
    """
    denom = (1.0 - p0) + (1.0 - p1)
    if denom == 0.0:
        return 1.0
    return (1.0 - p1) / denom


def simulate_zeno_chain(p0: float, p1: float, n: int, seed: int) -> Trajectory:
    """Generate a Zeno-model record directly from stay probabilities.

    The first outcome is drawn from the chain's stationary distribution
    (removes burn-in bias in long-run statistics); outcome k >= 1 uses
    draw k against the stay probability of outcome k-1.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    draws = _keyed_draws(seed, n)
    out = np.empty(n, dtype=bool)
    state_on = bool(draws[0] < stationary_on_probability(p0, p1))
    out[0] = state_on
    if p0 == p1:
        # Constant stay threshold: the state at step k is the start state
        # flipped once per draw >= p, i.e. by the parity of the flip count.
        flips = draws[1:] >= p0
        out[1:] = state_on ^ (np.cumsum(flips) % 2).astype(bool)
    else:
        state = MeasurementOutcome.ON if state_on else MeasurementOutcome.OFF
        for k in range(1, n):
            state = zeno_step(state, p0, p1, draws[k])
            out[k] = state is MeasurementOutcome.ON
    return Trajectory(seed=seed, model=GeneratorModel.ZENO, outcomes=out)


def zeno_stay_probabilities(config: ExperimentConfig) -> tuple[float, float]:
    """Per-pulse stay probabilities (p0, p1) implied by the physics config."""
    p0 = survival_probability("on", config.drive, config.relax, config.degeneracy)
    p1 = survival_probability("off", config.drive, config.relax, config.degeneracy)
    return p0, p1


def simulate_zeno(config: ExperimentConfig, seed: int) -> Trajectory:
    """Generate a record under the state-reduction model.

    Survival probabilities are computed once from the config and then
    drive a two-state Markov chain of length ``config.n_measurements``.
    """
    p0, p1 = zeno_stay_probabilities(config)
    return simulate_zeno_chain(p0, p1, config.n_measurements, seed)


def coherent_survival(omega_tau: float, q: int) -> float:
    """Survival law cos^2(q*omega*tau/2) with exact nodes snapped to 0."""
    value = np.cos(q * omega_tau / 2.0) ** 2
    return 0.0 if value < NODE_EPS else float(value)


def coherent_continuation(omega_tau: float, q: int) -> float:
    """Probability that a run of current length q grows to q + 1.

    Defined as V(q)/V(q-1) clipped to [0, 1].  The clip only engages
    where the raw cosine law is non-monotone (pulse areas beyond the
    first node), in which regime the law stops being a valid survival
    function; up to the first node the chain reproduces it exactly.
    """
    prev = coherent_survival(omega_tau, q - 1)
    if prev == 0.0:
        return 0.0
    return min(1.0, coherent_survival(omega_tau, q) / prev)


def simulate_coherent(config: ExperimentConfig, seed: int) -> Trajectory:
    """Generate a record under uninterrupted coherent evolution.

    The record starts 'on' (prepared ground state).  A run of current
    length q continues with probability V(q)/V(q-1); when a run ends the
    outcome flips and the phase accumulator restarts at V(0) = 1.  By
    construction the run lengths follow V(q) = cos^2(q*omega*tau/2)
    wherever that law is a valid (non-increasing) survival function.

    Raises
    ------
    CoherentModeRequiresNoRelaxation
        If either relaxation rate is nonzero; the coherent alternative is
        defined only while the driven coherence survives.
    """
    if not config.relax.is_zero:
        raise CoherentModeRequiresNoRelaxation(
            f"coherent mode needs big_gamma = gamma_ph = 0, got {config.relax}"
        )
    n = config.n_measurements
    omega_tau = config.drive.pulse_area
    draws = _keyed_draws(seed, n)
    out = np.empty(n, dtype=bool)
    state_on = True
    out[0] = state_on
    run_length = 1
    for k in range(1, n):
        if draws[k] < coherent_continuation(omega_tau, run_length):
            run_length += 1
        else:
            state_on = not state_on
            run_length = 1
        out[k] = state_on
    return Trajectory(seed=seed, model=GeneratorModel.COHERENT, outcomes=out)


def simulate(config: ExperimentConfig, model: GeneratorModel, seed: int) -> Trajectory:
    if model is GeneratorModel.ZENO:
        return simulate_zeno(config, seed)
    return simulate_coherent(config, seed)
