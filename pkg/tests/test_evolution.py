import math

import numpy as np
import pytest

from qcs.entangled_basis import entangled_state
from qcs.errors import BadParams
from qcs.evolution import (
    ALWAYS_ONE,
    FOUND,
    TimeSeries,
    closed_form_fidelity,
    concurrence_series,
    evolve,
    exchange_hamiltonian,
    fidelity_series,
    is_xx_like,
    revival_time,
)
from qcs.spin_models import CouplingParams

XX = CouplingParams.xyz(jx=1.0, jy=1.0, jz=0.0)


def unit_label(theta):
    return complex(math.cos(theta), math.sin(theta))


def test_time_series_guards():
    with pytest.raises(ValueError):
        TimeSeries(np.array([0.0, 1.0]), np.array([1.0]))
    with pytest.raises(ValueError):
        TimeSeries(np.array([0.0, 0.0]), np.array([1.0, 1.0]))


def test_exchange_hamiltonian_form():
    h = exchange_hamiltonian(XX)
    # two-qubit XX exchange: off-diagonal 2J in the flip-flop block
    expected = np.zeros((4, 4))
    expected[1, 2] = expected[2, 1] = 2.0
    assert np.allclose(h, expected, atol=1e-15)


def test_exchange_hamiltonian_rejects_non_xyz():
    with pytest.raises(BadParams):
        exchange_hamiltonian(CouplingParams.xxx(j=1.0))


def test_is_xx_like():
    assert is_xx_like(XX)
    assert not is_xx_like(CouplingParams.xyz(jx=1.0, jy=1.0, jz=0.5))
    assert not is_xx_like(CouplingParams.xyz(jx=1.0, jy=0.9, jz=0.0))


def test_evolve_identity_cases():
    state = entangled_state("P+", 0.3 + 0.7j)
    h = exchange_hamiltonian(XX)
    at_zero = evolve(h, state, 0.0)
    assert np.allclose(at_zero.amplitudes, state.amplitudes, atol=1e-12)
    frozen = evolve(np.zeros((4, 4)), state, 2.7)
    assert np.allclose(frozen.amplitudes, state.amplitudes, atol=1e-12)


def test_evolve_norm_and_energy_conserved():
    state = entangled_state("P+", 0.3 + 0.7j)
    h = exchange_hamiltonian(CouplingParams.xyz(jx=0.8, jy=-0.3, jz=0.5))
    e0 = float(np.real(np.vdot(state.amplitudes, h @ state.amplitudes)))
    for t in (0.4, 1.9, 13.0):
        out = evolve(h, state, t)
        assert math.isclose(np.linalg.norm(out.amplitudes), 1.0, abs_tol=1e-12)
        e_t = float(np.real(np.vdot(out.amplitudes, h @ out.amplitudes)))
        assert abs(e_t - e0) < 1e-10


def test_evolve_group_law():
    state = entangled_state("P+", -0.2 + 1.1j)
    h = exchange_hamiltonian(XX)
    one_step = evolve(h, evolve(h, state, 0.7), 0.6)
    direct = evolve(h, state, 1.3)
    assert np.max(np.abs(one_step.amplitudes - direct.amplitudes)) < 1e-12


def test_middle_amplitudes_carry_phase():
    theta = 0.9
    state = entangled_state("P+", unit_label(theta))
    h = exchange_hamiltonian(XX)
    t = 0.37
    out = evolve(h, state, t)
    phase = np.exp(-2j * t)
    assert abs(out.amplitudes[1] - phase * state.amplitudes[1]) < 1e-12
    assert abs(out.amplitudes[2] - phase * state.amplitudes[2]) < 1e-12
    assert abs(out.amplitudes[0] - state.amplitudes[0]) < 1e-12
    assert abs(out.amplitudes[3] - state.amplitudes[3]) < 1e-12


def test_fidelity_series_closed_form():
    ts = np.linspace(0.0, 4.0 * math.pi, 161)
    for theta in (0.0, math.pi / 8, math.pi / 4, 3 * math.pi / 8):
        fid = fidelity_series(XX, unit_label(theta), ts)
        law = 1.0 - np.sin(2.0 * theta) ** 2 * np.sin(ts) ** 2
        assert np.max(np.abs(fid.values - law)) < 1e-8
        assert np.max(np.abs(closed_form_fidelity(theta, ts, 1.0) - law)) < 1e-12


def test_fidelity_scales_with_coupling_and_hbar():
    params = CouplingParams.xyz(jx=2.5, jy=2.5, jz=0.0, hbar=0.7)
    ts = np.linspace(0.0, 2.0, 41)
    theta = 0.6
    fid = fidelity_series(params, unit_label(theta), ts)
    law = 1.0 - np.sin(2.0 * theta) ** 2 * np.sin(2.5 * ts / 0.7) ** 2
    assert np.max(np.abs(fid.values - law)) < 1e-8


def test_concurrence_series_structure():
    ts = np.linspace(0.0, 2.0 * math.pi, 101)
    # real label: the state is stationary up to phase
    flat = concurrence_series(XX, 0.6, ts)
    assert np.ptp(flat.values) < 1e-12
    # unit-circle label: C(0) = 1 and period pi in t
    conc = concurrence_series(XX, unit_label(0.9), ts)
    assert abs(conc.values[0] - 1.0) < 1e-10
    shifted = concurrence_series(XX, unit_label(0.9), ts + math.pi)
    assert np.max(np.abs(conc.values - shifted.values)) < 1e-10


def test_revival_near_pi():
    rev = revival_time(XX, unit_label(math.pi / 8))
    assert rev.status == FOUND
    assert abs(rev.time - math.pi) < 1e-4


def test_revival_scales():
    params = CouplingParams.xyz(jx=2.5, jy=2.5, jz=0.0, hbar=0.7)
    rev = revival_time(params, unit_label(0.6))
    assert rev.status == FOUND
    assert abs(rev.time - math.pi * 0.7 / 2.5) < 1e-4


def test_revival_degenerate_labels():
    assert revival_time(XX, 1.0).status == ALWAYS_ONE
    assert revival_time(XX, 1j).status == ALWAYS_ONE


def test_revival_guards():
    with pytest.raises(BadParams):
        revival_time(CouplingParams.xyz(jx=1.0, jy=0.5, jz=0.0), 1.0)
    with pytest.raises(BadParams):
        revival_time(XX, 2.0)  # off the unit circle
