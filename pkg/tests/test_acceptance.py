"""Acceptance gate: one test per criterion, each printing a pass line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
report.
"""
import time

import numpy as np
import pytest

from topomem import (
    DEFAULT_PAIR,
    BellDiagonalState,
    PRESETS,
    ProjectiveQubitMeasurement,
    adabi_bound,
    berta_bound,
    bounds_at,
    emit,
    gamma,
    holevo,
    hyp1f1,
    hyp2f2_11_32_2,
    key_rate_adabi,
    key_rate_berta,
    run_sweep,
    to_density_matrix,
)
from conftest import (
    oracle_gamma,
    oracle_hyp1f1,
    oracle_hyp2f2,
    random_bell_states,
    random_unit_vectors,
)
from test_qstate import holevo_closed_form


def report(name):
    print(f"\nACCEPTANCE PASS: {name}")


@pytest.fixture(scope="module")
def preset_samples():
    return {name: run_sweep(cfg) for name, cfg in PRESETS.items()}


def test_special_function_oracle_suite():
    start = time.monotonic()
    for x in (0.1, 0.5, 0.75, 1.0, 2.5, 5.0, 12.0, 29.9, -0.25, -1.5, -7.3, -15.6, -29.5):
        assert gamma(x) == pytest.approx(oracle_gamma(x), rel=1e-10)
    for a in (-0.25, 0.25, 0.75):
        for z in (0.0, -0.5, -1.0, -5.0, -25.0, -60.0, -120.0, -250.0):
            assert hyp1f1(a, 0.5, z) == pytest.approx(
                oracle_hyp1f1(a, 0.5, z), rel=1e-10
            )
    for z in (0.0, -0.1, -1.0, -8.0, -12.0, -40.0, -90.0, -170.0, -250.0):
        assert hyp2f2_11_32_2(z) == pytest.approx(oracle_hyp2f2(z), rel=1e-10)
    # Kummer-transform self-consistency against the raw series oracle.
    for a in (-0.25, 0.25, 0.75):
        for z in np.linspace(-30.0, -1.0, 30):
            assert hyp1f1(a, 0.5, float(z)) == pytest.approx(
                oracle_hyp1f1(a, 0.5, float(z)), rel=1e-9
            )
    elapsed = time.monotonic() - start
    assert elapsed < 10.0
    report(f"special-function oracle suite ({elapsed:.2f}s)")


def test_holevo_equivalence():
    start = time.monotonic()
    rng = np.random.default_rng(2024)
    states = random_bell_states(rng, 1000)
    vecs = random_unit_vectors(rng, 1000)
    for state, n in zip(states, vecs):
        m = ProjectiveQubitMeasurement(tuple(n))
        assert holevo(to_density_matrix(state), m) == pytest.approx(
            holevo_closed_form(state, n), abs=1e-10
        )
    elapsed = time.monotonic() - start
    assert elapsed < 10.0
    report(f"Holevo matrix/closed-form equivalence on 1000 states ({elapsed:.2f}s)")


def test_eigenvalue_oracle():
    rng = np.random.default_rng(4096)
    for state in random_bell_states(rng, 1000):
        numeric = np.sort(to_density_matrix(state).eigenvalues())
        analytic = np.sort(state.eigenvalues())
        assert np.max(np.abs(numeric - analytic)) < 1e-12
    report("analytic Bell-diagonal spectra vs numeric eigendecomposition")


def test_tightness_ordering(preset_samples):
    for name, samples in preset_samples.items():
        for s in samples:
            assert s.u_adabi >= s.u_berta - 1e-12, (name, s.t)
            assert s.k_adabi >= s.k_berta - 1e-12, (name, s.t)
    report("u_adabi >= u_berta and k_adabi >= k_berta on every preset sample")


def test_fig3a_limits(preset_samples):
    final = preset_samples["fig3-f-sub"][-1]
    assert abs(final.u_adabi - 2.0) < 0.05
    for s in preset_samples["fig3-b-sub"]:
        assert s.u_adabi <= 2.0 - 0.05
    report("sub-Ohmic fermionic bound saturates at 2; bosonic stays below")


def test_fig3d_ordering():
    from topomem import EnvironmentKind, EnvironmentSpec

    state = BellDiagonalState(-0.6, 0.5, 0.5)
    for kind in EnvironmentKind:
        values = []
        for s in (0.5, 1.0, 2.5):
            spec = EnvironmentSpec(kind, s=s, coupling_b=0.1)
            values.append(bounds_at(state, DEFAULT_PAIR, 20.0, spec).u_adabi)
        assert values[0] >= values[1] - 1e-12 >= values[2] - 2e-12, (kind, values)
    report("u_adabi at t=20 non-increasing in Ohmicity for both environments")


def test_fig4c_key_rate_signs(preset_samples):
    for s in preset_samples["fig4-b-super"]:
        assert s.k_adabi > 0.0 and s.k_berta > 0.0, s.t
    for name in ("fig4-f-sub", "fig4-f-ohmic"):
        assert any(s.k_adabi < 0.0 for s in preset_samples[name]), name
    report("super-Ohmic bosonic key rates stay positive; fermionic go negative")


def test_static_anchors():
    bell = BellDiagonalState(1.0, -1.0, 1.0)
    mixed = BellDiagonalState(0.0, 0.0, 0.0)
    assert berta_bound(bell) == pytest.approx(0.0, abs=1e-10)
    assert adabi_bound(bell)[0] == pytest.approx(0.0, abs=1e-10)
    assert key_rate_berta(bell) == pytest.approx(1.0, abs=1e-10)
    assert key_rate_adabi(bell) == pytest.approx(1.0, abs=1e-10)
    assert berta_bound(mixed) == pytest.approx(2.0, abs=1e-10)
    assert adabi_bound(mixed)[0] == pytest.approx(2.0, abs=1e-10)
    assert key_rate_berta(mixed) == pytest.approx(-1.0, abs=1e-10)
    assert key_rate_adabi(mixed) == pytest.approx(-1.0, abs=1e-10)
    report("static anchors at t=0 (Bell and maximally mixed states)")


def test_determinism(preset_samples):
    for name, cfg in PRESETS.items():
        first = emit(preset_samples[name], cfg)
        second = emit(run_sweep(cfg), cfg)
        assert first == second, name
    report("byte-identical CSV across repeated preset runs")
