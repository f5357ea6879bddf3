"""Entropic uncertainty and secret-key-rate lower bounds.

Assembles, from the density-matrix primitives, the memory-assisted
uncertainty bounds (the Berta bound and the tighter Adabi bound) and the
corresponding two key-rate lower bounds, for a pair of projective qubit
observables measured on A while B plays the quantum memory.
"""
from __future__ import annotations

from dataclasses import dataclass

from .decoherence import EnvironmentSpec, alpha
from .qstate import (
    BellDiagonalState,
    DensityMatrix,
    ProjectiveQubitMeasurement,
    SIGMA_X,
    SIGMA_Z,
    conditional_entropy,
    evolve_bell_diagonal,
    holevo,
    mutual_information,
    post_measurement_state,
    to_density_matrix,
)
import math


@dataclass(frozen=True)
class ObservablePair:
    """Two projective qubit observables with their complementarity."""

    q: ProjectiveQubitMeasurement
    r: ProjectiveQubitMeasurement

    @property
    def complementarity_c(self) -> float:
        dot = sum(a * b for a, b in zip(self.q.n, self.r.n))
        return 0.5 * (1.0 + abs(dot))

    @property
    def incompatibility(self) -> float:
        """log2(1/c), the uncertainty floor set by the observable pair."""
        return -math.log2(self.complementarity_c)


DEFAULT_PAIR = ObservablePair(q=SIGMA_X, r=SIGMA_Z)


@dataclass(frozen=True)
class BoundsSample:
    """All bound-related quantities at one time point, in bits."""

    t: float
    alpha: float
    u_berta: float
    u_adabi: float
    delta: float
    k_berta: float
    k_adabi: float
    s_qb: float
    s_rb: float
    s_ab: float
    i_ab: float
    i_qb: float
    i_rb: float

    FIELDS = (
        "t", "alpha", "u_berta", "u_adabi", "delta", "k_berta", "k_adabi",
        "s_qb", "s_rb", "s_ab", "i_ab", "i_qb", "i_rb",
    )


def complementarity(pair: ObservablePair) -> float:
    return pair.complementarity_c


def _measured_conditional_entropy(
    rho: DensityMatrix, m: ProjectiveQubitMeasurement
) -> float:
    return conditional_entropy(post_measurement_state(rho, m))


def berta_bound(state: BellDiagonalState, pair: ObservablePair = DEFAULT_PAIR) -> float:
    """log2(1/c) + S(A|B)."""
    return pair.incompatibility + conditional_entropy(to_density_matrix(state))


def adabi_bound(
    state: BellDiagonalState, pair: ObservablePair = DEFAULT_PAIR
) -> tuple[float, float]:
    """The tightened bound and its correction term delta.

    delta = I(A;B) - I(Q;B) - I(R;B); the bound adds max(0, delta) on top
    of the Berta bound.
    """
    rho = to_density_matrix(state)
    delta = mutual_information(rho) - holevo(rho, pair.q) - holevo(rho, pair.r)
    u = pair.incompatibility + conditional_entropy(rho) + max(0.0, delta)
    return u, delta


def key_rate_berta(
    state: BellDiagonalState, pair: ObservablePair = DEFAULT_PAIR
) -> float:
    """log2(1/c) - S(Q|B) - S(R|B); negative means no extractable key."""
    rho = to_density_matrix(state)
    return (
        pair.incompatibility
        - _measured_conditional_entropy(rho, pair.q)
        - _measured_conditional_entropy(rho, pair.r)
    )


def key_rate_adabi(
    state: BellDiagonalState, pair: ObservablePair = DEFAULT_PAIR
) -> float:
    """Key-rate bound tightened by the same max(0, delta) correction."""
    _, delta = adabi_bound(state, pair)
    return key_rate_berta(state, pair) + max(0.0, delta)


def bounds_at(
    state0: BellDiagonalState,
    pair: ObservablePair,
    t: float,
    spec: EnvironmentSpec,
) -> BoundsSample:
    """Evolve the initial state to time t and evaluate every bound."""
    state = evolve_bell_diagonal(state0, t, spec)
    rho = to_density_matrix(state)
    s_ab = conditional_entropy(rho)
    i_ab = mutual_information(rho)
    i_qb = holevo(rho, pair.q)
    i_rb = holevo(rho, pair.r)
    s_qb = _measured_conditional_entropy(rho, pair.q)
    s_rb = _measured_conditional_entropy(rho, pair.r)
    delta = i_ab - i_qb - i_rb
    log_inv_c = pair.incompatibility
    u_berta = log_inv_c + s_ab
    k_berta = log_inv_c - s_qb - s_rb
    correction = max(0.0, delta)
    return BoundsSample(
        t=t,
        alpha=alpha(t, spec),
        u_berta=u_berta,
        u_adabi=u_berta + correction,
        delta=delta,
        k_berta=k_berta,
        k_adabi=k_berta + correction,
        s_qb=s_qb,
        s_rb=s_rb,
        s_ab=s_ab,
        i_ab=i_ab,
        i_qb=i_qb,
        i_rb=i_rb,
    )
