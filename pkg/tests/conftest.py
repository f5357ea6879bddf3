"""Shared extended-precision oracles and random-state helpers."""
from __future__ import annotations

import mpmath as mp
import numpy as np

from topomem import BellDiagonalState


def _series_dps(z: float) -> int:
    # Alternating-series cancellation eats ~0.44*|z| digits, and the result
    # itself can be as small as e^{-|z|}; keep 50 digits spare beyond both.
    return 50 + int(0.9 * abs(z))


def oracle_hyp1f1(a: float, b: float, z: float) -> float:
    """Brute-force 1F1 defining series summed in extended precision."""
    with mp.workdps(_series_dps(z)):
        am, bm, zm = mp.mpf(a), mp.mpf(b), mp.mpf(z)
        term = mp.mpf(1)
        total = mp.mpf(1)
        tol = mp.mpf(10) ** (-(_series_dps(z) - 10))
        for k in range(100_000):
            term *= (am + k) / (bm + k) * zm / (k + 1)
            total += term
            if abs(term) < tol * abs(total) and k > abs(z):
                break
        return float(total)


def oracle_hyp2f2(z: float) -> float:
    """Brute-force 2F2({1,1};{3/2,2};z) series in extended precision."""
    with mp.workdps(_series_dps(z)):
        zm = mp.mpf(z)
        term = mp.mpf(1)
        total = mp.mpf(1)
        tol = mp.mpf(10) ** (-(_series_dps(z) - 10))
        for k in range(100_000):
            term *= (k + 1) * zm / ((k + mp.mpf("1.5")) * (k + 2))
            total += term
            if abs(term) < tol * abs(total) and k > abs(z):
                break
        return float(total)


def oracle_gamma(x: float) -> float:
    with mp.workdps(50):
        return float(mp.gamma(mp.mpf(x)))


def binary_entropy_oracle(p: float) -> float:
    with mp.workdps(50):
        pm = mp.mpf(p)
        if pm in (0, 1):
            return 0.0
        return float(-pm * mp.log(pm, 2) - (1 - pm) * mp.log(1 - pm, 2))


def random_bell_states(rng: np.random.Generator, n: int) -> list[BellDiagonalState]:
    """Uniformly sample valid Bell-diagonal states via simplex weights."""
    lam = rng.dirichlet(np.ones(4), size=n)
    states = []
    for l1, l2, l3, l4 in lam:
        # Inverse of the Bell-basis spectrum map.
        states.append(
            BellDiagonalState(
                c1=l1 - l2 + l3 - l4,
                c2=-l1 + l2 + l3 - l4,
                c3=l1 + l2 - l3 - l4,
            )
        )
    return states


def random_unit_vectors(rng: np.random.Generator, n: int) -> np.ndarray:
    v = rng.normal(size=(n, 3))
    return v / np.linalg.norm(v, axis=1, keepdims=True)
