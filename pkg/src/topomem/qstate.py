"""Density-matrix algebra for one and two qubits.

Everything here is dense and small (2x2 or 4x4): Bell-diagonal states,
entropies, partial traces, projective qubit measurements with their
post-measurement states, mutual information and the Holevo quantity.
All entropies are in bits.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .decoherence import EnvironmentKind, EnvironmentSpec, alpha

# Eigenvalues above this (negative) floor are treated as rounding noise
# and clipped to zero inside entropy sums; anything below is a real
# positivity violation.
_EIG_FLOOR = -1e-10

_SIGMA = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)
_I2 = np.eye(2, dtype=complex)


class InvalidStateError(ValueError):
    """Input matrix fails the density-matrix invariants."""


class DensityMatrix:
    """Immutable Hermitian, unit-trace, positive-semidefinite matrix."""

    __slots__ = ("_matrix",)

    def __init__(self, matrix: np.ndarray, herm_tol: float = 1e-12, trace_tol: float = 1e-12):
        m = np.array(matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] not in (2, 4):
            raise InvalidStateError(f"expected a 2x2 or 4x4 matrix, got shape {m.shape}")
        if np.max(np.abs(m - m.conj().T)) > herm_tol:
            raise InvalidStateError("matrix is not Hermitian within tolerance")
        tr = np.trace(m)
        if abs(tr - 1.0) > trace_tol:
            raise InvalidStateError(f"trace {tr} differs from 1")
        if float(np.min(np.linalg.eigvalsh(m))) < _EIG_FLOOR:
            raise InvalidStateError("matrix has a genuinely negative eigenvalue")
        m.setflags(write=False)
        self._matrix = m

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    @property
    def dim(self) -> int:
        return self._matrix.shape[0]

    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvalsh(self._matrix)

    def __repr__(self) -> str:
        return f"DensityMatrix(dim={self.dim})"


@dataclass(frozen=True)
class BellDiagonalState:
    """Two-qubit state 1/4 (I + sum_k c_k sigma_k x sigma_k).

    Valid iff (c1, c2, c3) lies in the tetrahedron with vertices
    (-1,-1,-1), (-1,1,1), (1,-1,1), (1,1,-1).
    """

    c1: float
    c2: float
    c3: float

    def __post_init__(self) -> None:
        lam = self.eigenvalues()
        if min(lam) < -1e-12 or max(lam) > 1.0 + 1e-12:
            raise InvalidStateError(
                f"({self.c1}, {self.c2}, {self.c3}) lies outside the Bell tetrahedron"
            )

    def eigenvalues(self) -> tuple[float, float, float, float]:
        """Spectrum in the Bell basis (Phi+, Phi-, Psi+, Psi- order)."""
        c1, c2, c3 = self.c1, self.c2, self.c3
        return (
            0.25 * (1 + c1 - c2 + c3),
            0.25 * (1 - c1 + c2 + c3),
            0.25 * (1 + c1 + c2 - c3),
            0.25 * (1 - c1 - c2 - c3),
        )


@dataclass(frozen=True)
class ProjectiveQubitMeasurement:
    """Rank-1 projective qubit measurement along a unit Bloch vector."""

    n: tuple[float, float, float]

    def __post_init__(self) -> None:
        norm = math.sqrt(sum(x * x for x in self.n))
        if abs(norm - 1.0) > 1e-12:
            raise ValueError(f"Bloch vector must be unit length, |n| = {norm}")

    def projectors(self) -> tuple[np.ndarray, np.ndarray]:
        n_sigma = sum(nk * sk for nk, sk in zip(self.n, _SIGMA))
        return 0.5 * (_I2 + n_sigma), 0.5 * (_I2 - n_sigma)


SIGMA_X = ProjectiveQubitMeasurement((1.0, 0.0, 0.0))
SIGMA_Z = ProjectiveQubitMeasurement((0.0, 0.0, 1.0))


def to_density_matrix(state: BellDiagonalState) -> DensityMatrix:
    m = np.eye(4, dtype=complex)
    for ck, sk in zip((state.c1, state.c2, state.c3), _SIGMA):
        m += ck * np.kron(sk, sk)
    return DensityMatrix(0.25 * m)


def evolve_bell_diagonal(
    state: BellDiagonalState, t: float, spec: EnvironmentSpec
) -> BellDiagonalState:
    """Bell-diagonal correlations after the memory qubit decoheres for time t.

    Both environments scale c1 and c2 by alpha(t); the fermionic one also
    contracts c3 by alpha^2 while the bosonic one leaves c3 intact.
    """
    a = alpha(t, spec)
    c3 = state.c3 * a * a if spec.kind is EnvironmentKind.FERMIONIC else state.c3
    return BellDiagonalState(state.c1 * a, state.c2 * a, c3)


def _entropy_of_spectrum(eigenvalues: np.ndarray) -> float:
    total = 0.0
    for lam in eigenvalues:
        if lam < _EIG_FLOOR:
            raise InvalidStateError(f"negative eigenvalue {lam} in entropy")
        if lam > 0.0:
            total -= lam * math.log2(lam)
    return total


def von_neumann_entropy(rho: DensityMatrix) -> float:
    """S(rho) = -tr(rho log2 rho), in bits."""
    return _entropy_of_spectrum(rho.eigenvalues())


def binary_entropy(p: float) -> float:
    """Shannon entropy of {p, 1-p} in bits."""
    if not (0.0 <= p <= 1.0):
        raise ValueError(f"probability out of range: {p}")
    if p == 0.0 or p == 1.0:
        return 0.0
    return -p * math.log2(p) - (1.0 - p) * math.log2(1.0 - p)


def _partial_trace(m: np.ndarray, keep: int) -> np.ndarray:
    r = m.reshape(2, 2, 2, 2)
    if keep == 0:
        return np.einsum("ikjk->ij", r)
    return np.einsum("kikj->ij", r)


def partial_trace_a(rho: DensityMatrix) -> DensityMatrix:
    """Trace out the first qubit of a 4x4 state."""
    if rho.dim != 4:
        raise InvalidStateError("partial trace requires a 4x4 state")
    return DensityMatrix(_partial_trace(rho.matrix, keep=1))


def partial_trace_b(rho: DensityMatrix) -> DensityMatrix:
    """Trace out the second qubit of a 4x4 state."""
    if rho.dim != 4:
        raise InvalidStateError("partial trace requires a 4x4 state")
    return DensityMatrix(_partial_trace(rho.matrix, keep=0))


def conditional_entropy(rho_ab: DensityMatrix) -> float:
    """S(A|B) = S(AB) - S(B); negative for entangled states."""
    return von_neumann_entropy(rho_ab) - von_neumann_entropy(partial_trace_a(rho_ab))


def measurement_outcomes(
    rho_ab: DensityMatrix, m: ProjectiveQubitMeasurement
) -> list[tuple[float, DensityMatrix | None]]:
    """Outcome probabilities and conditioned memory states for measuring A.

    Outcomes with probability below 1e-14 carry ``None`` in place of a
    conditioned state.
    """
    if rho_ab.dim != 4:
        raise InvalidStateError("measurement requires a 4x4 state")
    outcomes: list[tuple[float, DensityMatrix | None]] = []
    for p_op in m.projectors():
        pi = np.kron(p_op, _I2)
        sub = pi @ rho_ab.matrix @ pi
        p = float(np.trace(sub).real)
        if p < 1e-14:
            outcomes.append((p, None))
        else:
            outcomes.append((p, DensityMatrix(_partial_trace(sub, keep=1) / p)))
    return outcomes


def post_measurement_state(
    rho_ab: DensityMatrix, m: ProjectiveQubitMeasurement
) -> DensityMatrix:
    """Dephase qubit A in the measurement eigenbasis (sum_i Pi_i rho Pi_i)."""
    if rho_ab.dim != 4:
        raise InvalidStateError("measurement requires a 4x4 state")
    out = np.zeros((4, 4), dtype=complex)
    for p_op in m.projectors():
        pi = np.kron(p_op, _I2)
        out += pi @ rho_ab.matrix @ pi
    return DensityMatrix(out)


def holevo(rho_ab: DensityMatrix, m: ProjectiveQubitMeasurement) -> float:
    """Holevo quantity S(B) - sum_x p_x S(B|x) for measuring A, in bits."""
    s_b = von_neumann_entropy(partial_trace_a(rho_ab))
    avg = 0.0
    for p, rho_x in measurement_outcomes(rho_ab, m):
        if rho_x is not None:
            avg += p * von_neumann_entropy(rho_x)
    return s_b - avg


def mutual_information(rho_ab: DensityMatrix) -> float:
    """I(A;B) = S(A) + S(B) - S(AB), in bits."""
    return (
        von_neumann_entropy(partial_trace_b(rho_ab))
        + von_neumann_entropy(partial_trace_a(rho_ab))
        - von_neumann_entropy(rho_ab)
    )
