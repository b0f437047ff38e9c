"""State action, Bell states, concurrence, and the entangling detector."""

import math

import numpy as np
import pytest

from ybgates.eightvertex import (
    build_b_phi,
    build_R_theta,
    build_R_x_normalized,
    sign_value,
)
from ybgates.entangle import (
    NonUnitaryGateError,
    apply_gate,
    basis_state,
    bell_from_b,
    concurrence,
    is_entangling,
    product_state_grid,
    r_theta_action,
    single_qubit_eigenstates,
)
from ybgates.gates import cnot
from ybgates.linalg import kron

I4 = np.eye(4, dtype=complex)
SWAP = np.array(
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex
)


def _expected_action(sign, phi, theta, index):
    # Closed-form columns: cos(pi/4 - theta) on the input ket plus
    # sin(pi/4 - theta) times the flip partner with the family's phases.
    s = sign_value(sign)
    u = math.pi / 4.0 - theta
    c, sn = math.cos(u), math.sin(u)
    out = np.zeros(4, dtype=complex)
    if index == 0:
        out[0], out[3] = c, -np.exp(1j * phi) * sn
    elif index == 1:
        out[1], out[2] = c, -s * sn
    elif index == 2:
        out[2], out[1] = c, s * sn
    else:
        out[3], out[0] = c, np.exp(-1j * phi) * sn
    return out


def test_apply_gate_identity():
    psi = np.array([0.5, 0.5, 0.5, 0.5], dtype=complex)
    assert np.array_equal(apply_gate(I4, psi), psi)


def test_apply_gate_cnot():
    assert np.array_equal(apply_gate(cnot(), basis_state(2)), basis_state(3))


def test_apply_gate_bell_output():
    got = apply_gate(build_b_phi("+", 0.0), basis_state(0))
    expected = np.array([1, 0, 0, -1], dtype=complex) / math.sqrt(2)
    assert np.max(np.abs(got - expected)) < 1e-15
    assert abs(np.linalg.norm(got) - 1.0) < 1e-12


def test_apply_gate_rejects_non_unitary():
    with pytest.raises(NonUnitaryGateError):
        apply_gate(2.0 * I4, basis_state(0))


def test_basis_state_range():
    with pytest.raises(ValueError):
        basis_state(4)


def test_bell_from_b_examples():
    s2 = math.sqrt(2)
    got = bell_from_b("+", 0.0, 0)
    assert np.max(np.abs(got - np.array([1, 0, 0, -1]) / s2)) < 1e-15
    got = bell_from_b("-", 0.0, 1)
    assert np.max(np.abs(got - np.array([0, 1, 1, 0]) / s2)) < 1e-15
    got = bell_from_b("+", math.pi / 2, 3)
    assert np.max(np.abs(got - np.array([-1j, 0, 0, 1]) / s2)) < 1e-15


@pytest.mark.parametrize("sign", ["+", "-"])
@pytest.mark.parametrize("phi", [0.0, math.pi / 3, math.pi / 2, math.pi])
def test_bell_from_b_columns_and_concurrence(sign, phi):
    for index in range(4):
        got = bell_from_b(sign, phi, index)
        assert np.max(np.abs(got - _expected_action(sign, phi, 0.0, index))) < 1e-12
        assert abs(concurrence(got) - 1.0) < 1e-12


def test_r_theta_action_examples():
    assert np.max(np.abs(r_theta_action("+", 1.1, math.pi / 4, 2) - basis_state(2))) < 1e-15
    got = r_theta_action("-", 0.0, 0.0, 0)
    assert np.max(np.abs(got - np.array([1, 0, 0, -1]) / math.sqrt(2))) < 1e-15
    got = r_theta_action("+", 0.0, math.pi / 8, 0)
    expected = np.array([math.cos(math.pi / 8), 0, 0, -math.sin(math.pi / 8)])
    assert np.max(np.abs(got - expected)) < 1e-15


@pytest.mark.parametrize("sign", ["+", "-"])
def test_r_theta_action_closed_form(sign):
    for phi in (0.0, 1.0):
        for theta in np.linspace(0.0, math.pi / 2, 9):
            theta = float(theta)
            for index in range(4):
                got = r_theta_action(sign, phi, theta, index)
                assert np.max(np.abs(got - _expected_action(sign, phi, theta, index))) < 1e-12
                assert abs(concurrence(got) - abs(math.cos(2.0 * theta))) < 1e-12


def test_concurrence_examples():
    assert concurrence(basis_state(0)) == 0.0
    bell = np.array([1, 0, 0, 1], dtype=complex) / math.sqrt(2)
    assert abs(concurrence(bell) - 1.0) < 1e-15
    tilted = np.array([math.cos(math.pi / 8), 0, 0, -math.sin(math.pi / 8)], dtype=complex)
    assert abs(concurrence(tilted) - math.sin(math.pi / 4)) < 1e-15


def test_concurrence_local_unitary_invariance():
    rng = np.random.default_rng(17)
    for _ in range(6):
        psi = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        psi /= np.linalg.norm(psi)
        u, _ = np.linalg.qr(rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2)))
        v, _ = np.linalg.qr(rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2)))
        assert abs(concurrence(kron(u, v) @ psi) - concurrence(psi)) < 1e-12


def test_product_state_grid_is_deterministic():
    first = product_state_grid(seed=123)
    second = product_state_grid(seed=123)
    other = product_state_grid(seed=124)
    assert len(first) == 36 + 64
    assert all(abs(np.linalg.norm(s) - 1.0) < 1e-12 for s in first)
    assert all(np.array_equal(a, b) for a, b in zip(first, second))
    assert not np.array_equal(first[-1], other[-1])
    assert len(single_qubit_eigenstates()) == 6


def test_is_entangling_braid_gate():
    verdict = is_entangling(build_b_phi("-", 0.0))
    assert verdict.entangling
    assert abs(verdict.concurrence_max - 1.0) < 1e-12
    assert verdict.witness is not None
    assert concurrence(verdict.witness) > 1e-9


def test_is_entangling_negative_cases():
    for gate in (I4, SWAP):
        verdict = is_entangling(gate)
        assert not verdict.entangling
        assert verdict.witness is None
        assert verdict.concurrence_max < 1e-12


def test_is_entangling_identity_point_of_family():
    gate = build_R_x_normalized("-", 0.0, 1.0)
    assert np.max(np.abs(gate - I4)) < 1e-15
    assert not is_entangling(gate).entangling


def test_is_entangling_rejects_non_unitary():
    with pytest.raises(NonUnitaryGateError):
        is_entangling(1.5 * I4)


def test_is_entangling_theta_family_boundary():
    for theta in (0.0, 0.3, math.pi / 4, 1.2):
        verdict = is_entangling(build_R_theta("+", 0.4, theta))
        expected = abs(math.cos(2.0 * theta))
        assert abs(verdict.concurrence_max - expected) < 1e-9
        assert verdict.entangling == (theta != math.pi / 4)
