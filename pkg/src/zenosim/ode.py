"""Numerical Bloch-equation oracle for validating the closed forms.

Integrates, on resonance,

    du/dt = -gamma * u
    dv/dt = -gamma * v + omega * w
    dw/dt = -omega * v - big_gamma * (w + 1)

with gamma = gamma_ph + big_gamma/2, so the inversion w relaxes toward -1
(everything decays to the ground state) and coherences at the total
transverse rate.  This is deliberately an independent route to the same
physics as :func:`zenosim.bloch.survival_probability`: agreement between
the two is a validation gate, so nothing here reuses the closed forms.
"""

from __future__ import annotations

import numpy as np
from scipy.integrate import solve_ivp

from .bloch import BlochState, DriveParams, RelaxationParams
from .errors import IntegrationFailure, NonResonant

# Local error targets; chosen so the oracle is far more accurate than the
# 1e-6 agreement budget it is used to enforce.
RTOL = 1e-10
ATOL = 1e-12

GROUND = BlochState(u=0.0, v=0.0, w=-1.0)
EXCITED = BlochState(u=0.0, v=0.0, w=1.0)


def _rhs(t, y, omega, big_gamma, gamma):
    u, v, w = y
    return (
        -gamma * u,
        -gamma * v + omega * w,
        -omega * v - big_gamma * (w + 1.0),
    )


def ode_oracle_evolve(
    initial: BlochState,
    drive: DriveParams,
    relax: RelaxationParams,
    t_end: float,
) -> BlochState:
    """Evolve a Bloch state for ``t_end`` seconds under resonant drive.

    Parameters
    ----------
    initial : BlochState
        State at t = 0.
    drive : DriveParams
        Only ``omega`` is used; ``delta`` must be 0.
    relax : RelaxationParams
        Inversion and phase relaxation rates.
    t_end : float
        Integration time (s), >= 0.

    Raises
    ------
    NonResonant
        If the drive is detuned; the oracle is resonance-only.
    IntegrationFailure
        If adaptive step control cannot meet the local error target.
    """
    if drive.delta != 0.0:
        raise NonResonant(f"ODE oracle requires delta = 0, got {drive.delta}")
    if t_end < 0:
        raise ValueError(f"t_end must be >= 0, got {t_end}")
    if t_end == 0.0:
        return initial
    sol = solve_ivp(
        _rhs,
        (0.0, t_end),
        (initial.u, initial.v, initial.w),
        method="DOP853",
        rtol=RTOL,
        atol=ATOL,
        args=(drive.omega, relax.big_gamma, relax.gamma),
    )
    if not sol.success:
        raise IntegrationFailure(sol.message)
    u, v, w = sol.y[:, -1]
    return BlochState(u=float(u), v=float(v), w=float(w))


def ode_trajectory(
    initial: BlochState,
    drive: DriveParams,
    relax: RelaxationParams,
    times: np.ndarray,
) -> np.ndarray:
    """Sample the evolution at given times; returns array of shape (n, 3)."""
    if drive.delta != 0.0:
        raise NonResonant(f"ODE oracle requires delta = 0, got {drive.delta}")
    times = np.asarray(times, dtype=float)
    sol = solve_ivp(
        _rhs,
        (0.0, float(times[-1])),
        (initial.u, initial.v, initial.w),
        method="DOP853",
        rtol=RTOL,
        atol=ATOL,
        t_eval=times,
        args=(drive.omega, relax.big_gamma, relax.gamma),
    )
    if not sol.success:
        raise IntegrationFailure(sol.message)
    return sol.y.T


def ode_excitation_probability(
    drive: DriveParams, relax: RelaxationParams
) -> float:
    """Transition probability of one pulse starting from the ground state.

    Integrates from (0, 0, -1) for ``drive.tau`` and reads off
    (1 + w)/2.
    """
    final = ode_oracle_evolve(GROUND, drive, relax, drive.tau)
    return final.excited_population


def ode_survival_probability(
    start_state: str, drive: DriveParams, relax: RelaxationParams
) -> float:
    """Oracle counterpart of :func:`zenosim.bloch.survival_probability`.

    Degeneracy factors are not part of the Bloch equations; this is the
    f = 1 survival of the chosen eigenstate after one pulse.
    """
    if start_state == "on":
        final = ode_oracle_evolve(GROUND, drive, relax, drive.tau)
        return 1.0 - final.excited_population
    if start_state == "off":
        final = ode_oracle_evolve(EXCITED, drive, relax, drive.tau)
        return final.excited_population
    raise ValueError(f"start_state must be 'on' or 'off', got {start_state!r}")
