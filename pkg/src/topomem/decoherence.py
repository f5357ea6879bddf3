"""Decoherence of a single topological qubit in an Ohmic-like environment.

The environment enters through three quantities: a time-independent
coupling coefficient beta (different closed forms for the fermionic and
bosonic cases), the time integral I_s(t) of the spectral response, and the
resulting damping factor alpha(t) = exp(-2 B^2 |beta| I_s(t)) applied to
coherences.
"""
from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass, field

import numpy as np

from .specfun import DEFAULT_CONTROL, SeriesControl, gamma, hyp1f1, hyp2f2_11_32_2

_INTEGER_DELTA_TOL = 1e-9


class EnvironmentKind(enum.Enum):
    FERMIONIC = "fermionic"
    BOSONIC = "bosonic"


@dataclass(frozen=True)
class EnvironmentSpec:
    """Ohmic-like environment parameters, in units where time is 1/gamma0.

    ``s`` is the Ohmicity exponent of the spectral density (sub-Ohmic
    s < 1, Ohmic s = 1, super-Ohmic s > 1).  ``n_sc`` and ``epsilon``
    only matter for the bosonic coefficient.
    """

    kind: EnvironmentKind
    s: float
    coupling_b: float
    gamma0: float = 1.0
    n_sc: float = 1.0
    epsilon: float = 1.0

    def __post_init__(self) -> None:
        if not (self.s > 0):
            raise ValueError(f"Ohmicity exponent s must be positive, got {self.s}")
        if not (self.gamma0 > 0):
            raise ValueError(f"cutoff gamma0 must be positive, got {self.gamma0}")
        if not math.isfinite(self.coupling_b):
            raise ValueError(f"coupling must be finite, got {self.coupling_b}")
        if self.kind is EnvironmentKind.BOSONIC:
            if not (self.n_sc > 0):
                raise ValueError(f"n_sc must be positive, got {self.n_sc}")
            if not (self.epsilon > 0):
                raise ValueError(f"epsilon must be positive, got {self.epsilon}")

    @property
    def conformal_dimension(self) -> float:
        return (self.s + 4.0) / 2.0


@dataclass(frozen=True)
class DecoherenceTrace:
    """Sampled damping factor alpha over a strictly increasing time grid."""

    times: tuple[float, ...]
    alpha: tuple[float, ...] = field(default=())

    def __post_init__(self) -> None:
        if len(self.times) != len(self.alpha):
            raise ValueError("times and alpha must have equal length")
        if any(t2 <= t1 for t1, t2 in zip(self.times, self.times[1:])):
            raise ValueError("times must be strictly increasing")
        if any(t < 0 for t in self.times):
            raise ValueError("times must be non-negative")
        if any(not (0.0 < a <= 1.0) for a in self.alpha):
            raise ValueError("alpha values must lie in (0, 1]")


def beta_fermionic(spec: EnvironmentSpec) -> float:
    """Coupling coefficient for the fermionic environment."""
    if spec.kind is not EnvironmentKind.FERMIONIC:
        raise ValueError("beta_fermionic requires a fermionic environment spec")
    return -4.0 * math.pi * spec.gamma0 ** (-(spec.s + 1.0)) / gamma((spec.s + 1.0) / 2.0)


def beta_bosonic(spec: EnvironmentSpec) -> float:
    """Coupling coefficient for the bosonic environment.

    Branches on whether the conformal dimension (s+4)/2 is an integer
    (decided within 1e-9); the integer branch needs dimension >= 3 for
    its factorial to exist.
    """
    if spec.kind is not EnvironmentKind.BOSONIC:
        raise ValueError("beta_bosonic requires a bosonic environment spec")
    delta = spec.conformal_dimension
    n = round(delta)
    prefactor = spec.n_sc**2 * spec.epsilon ** (2.0 * (delta - 4.0))
    if abs(delta - n) <= _INTEGER_DELTA_TOL:
        if n < 3:
            raise ValueError(
                f"integer conformal dimension {n} < 3 has no defined coefficient"
            )
        return -prefactor / (
            4.0 * math.pi * math.factorial(n - 3) ** 2 * 2.0 ** (2 * n - 5)
        )
    return (
        -prefactor
        * gamma(3.0 - delta)
        * math.sin(math.pi * delta)
        / (4.0 * math.pi**2 * gamma(delta - 2.0) * 2.0 ** (2.0 * delta - 5.0))
    )


def beta(spec: EnvironmentSpec) -> float:
    if spec.kind is EnvironmentKind.FERMIONIC:
        return beta_fermionic(spec)
    return beta_bosonic(spec)


@functools.lru_cache(maxsize=65536)
def i_s(t: float, spec: EnvironmentSpec, control: SeriesControl = DEFAULT_CONTROL) -> float:
    """Spectral time integral I_s(t).

    The s = 1 case is a removable singularity of the generic formula and
    uses its own 2F2 closed form; it is taken only when s == 1 exactly.
    Results are memoized (the function is pure and the s = 1 branch runs
    in software extended precision).
    """
    if t < 0:
        raise ValueError(f"time must be non-negative, got {t}")
    z = -((spec.gamma0 * t) ** 2) / 4.0
    if spec.s == 1.0:
        return (spec.gamma0 * t) ** 2 / 2.0 * hyp2f2_11_32_2(z, control)
    a = (spec.s - 1.0) / 2.0
    return (
        2.0
        * spec.gamma0 ** (spec.s - 1.0)
        * gamma(a)
        * (1.0 - hyp1f1(a, 0.5, z, control))
    )


def alpha(t: float, spec: EnvironmentSpec, control: SeriesControl = DEFAULT_CONTROL) -> float:
    """Coherence damping factor exp(-2 B^2 |beta| I_s(t))."""
    return math.exp(-2.0 * spec.coupling_b**2 * abs(beta(spec)) * i_s(t, spec, control))


def decoherence_trace(
    spec: EnvironmentSpec, t_max: float = 20.0, steps: int = 400
) -> DecoherenceTrace:
    """Sample alpha on a uniform grid from 0 to t_max inclusive."""
    if not (t_max > 0):
        raise ValueError(f"t_max must be positive, got {t_max}")
    if steps < 2:
        raise ValueError(f"steps must be >= 2, got {steps}")
    times = tuple(float(t) for t in np.linspace(0.0, t_max, steps))
    return DecoherenceTrace(times=times, alpha=tuple(alpha(t, spec) for t in times))


def _validate_qubit_state(rho: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (2, 2):
        raise ValueError(f"expected a 2x2 density matrix, got shape {rho.shape}")
    if np.max(np.abs(rho - rho.conj().T)) > tol:
        raise ValueError("density matrix is not Hermitian")
    if abs(np.trace(rho).real - 1.0) > tol or abs(np.trace(rho).imag) > tol:
        raise ValueError("density matrix trace differs from 1")
    if np.min(np.linalg.eigvalsh(rho)) < -tol:
        raise ValueError("density matrix has a negative eigenvalue")
    return rho


def evolve_single_qubit(
    rho0: np.ndarray, t: float, spec: EnvironmentSpec
) -> np.ndarray:
    """Single-qubit channel at time t.

    The fermionic channel contracts the Bloch vector anisotropically
    (populations toward 1/2 at rate alpha^2, coherences at rate alpha);
    the bosonic channel is pure dephasing of the coherences.
    """
    rho = _validate_qubit_state(rho0)
    a = alpha(t, spec)
    out = np.empty((2, 2), dtype=complex)
    if spec.kind is EnvironmentKind.FERMIONIC:
        out[0, 0] = 0.5 * (1.0 + (2.0 * rho[0, 0].real - 1.0) * a * a)
        out[1, 1] = 0.5 * (1.0 + (2.0 * rho[1, 1].real - 1.0) * a * a)
    else:
        out[0, 0] = rho[0, 0].real
        out[1, 1] = rho[1, 1].real
    out[0, 1] = rho[0, 1] * a
    out[1, 0] = np.conj(out[0, 1])
    return out
