import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import FIG1
from spinchannel.channel import ChannelParams, static_average
from spinchannel.linalg import eigvalsh, partial_transpose_first, random_density_matrix
from spinchannel.measures import (
    SIGMA_X_PROJECTORS,
    SIGMA_Z_PROJECTORS,
    bell_state_matrix,
    conditional_entropy,
    entropic_uncertainty,
    fidelity_pair,
    fidelity_to_bell,
    fidelity_to_initial,
    l1_coherence,
    mixedness_entropy,
    negativity,
    negativity_raw,
)
from spinchannel.spin import SpinParams, XState, thermal_state

MIXED = np.eye(4) / 4
KET00 = np.diag([1.0, 0, 0, 0]).astype(complex)
WERNER_HALF = 0.5 * bell_state_matrix() + 0.5 * MIXED


def test_negativity_exact_values(bell):
    assert negativity(bell) == pytest.approx(1.0, abs=1e-12)
    assert negativity(MIXED) == 0.0
    # partial transpose of the Werner state has spectrum {3/8, 3/8, 3/8, -1/8}
    assert np.allclose(np.linalg.eigvalsh(partial_transpose_first(WERNER_HALF)), [-1 / 8, 3 / 8, 3 / 8, 3 / 8])
    assert negativity(WERNER_HALF) == pytest.approx(0.25, abs=1e-10)


def test_negativity_rejects_invalid_state():
    with pytest.raises(ValueError):
        negativity(np.diag([0.5, 0.5, 0.5, -0.5]))


def test_l1_coherence_values(bell):
    assert l1_coherence(np.diag([0.1, 0.2, 0.3, 0.4])) == 0.0
    assert l1_coherence(bell) == pytest.approx(1.0)
    x = XState(0.25, 0.25, 0.25, 0.25, 0.2 * np.exp(0.3j), -0.3j).to_matrix()
    brute = sum(abs(x[i, j]) for i in range(4) for j in range(4) if i != j)
    assert brute == pytest.approx(1.0, abs=1e-15)
    assert l1_coherence(x) == pytest.approx(brute, abs=1e-15)


def test_entropic_uncertainty_values(bell):
    assert entropic_uncertainty(MIXED) == pytest.approx(2.0, abs=1e-9)
    assert entropic_uncertainty(bell) == pytest.approx(0.0, abs=1e-9)
    assert entropic_uncertainty(KET00) == pytest.approx(1.0, abs=1e-9)
    assert conditional_entropy(KET00, SIGMA_Z_PROJECTORS) == pytest.approx(0.0, abs=1e-12)
    assert conditional_entropy(KET00, SIGMA_X_PROJECTORS) == pytest.approx(1.0, abs=1e-12)


def test_mixedness_entropy_values():
    assert mixedness_entropy(KET00) <= 1e-12
    assert mixedness_entropy(MIXED) == pytest.approx(2.0, abs=1e-12)
    hot = thermal_state(SpinParams(J=1, delta_z=1, D_z=1, K_z=5, B=1, T=1e6)).to_matrix()
    assert mixedness_entropy(hot) == pytest.approx(2.0, abs=1e-8)


def test_fidelity_pair_values(bell):
    assert fidelity_pair(KET00, KET00) == pytest.approx(1.0)
    ket11 = np.diag([0, 0, 0, 1.0]).astype(complex)
    assert fidelity_pair(KET00, ket11) == 0.0
    assert fidelity_pair(MIXED, MIXED) == pytest.approx(33 / 128, abs=1e-15)
    assert fidelity_pair(bell, bell) == pytest.approx(1.0)


def test_fidelity_closed_forms_at_time_zero():
    s = thermal_state(FIG1)
    rho = s.to_matrix()
    c = ChannelParams(lam=0.1, Delta_Q=2.0)
    purity = np.trace(rho @ rho).real
    assert fidelity_to_initial(FIG1, c, 0.0) == pytest.approx(purity + 2 * np.linalg.det(rho).real, abs=1e-12)
    assert fidelity_to_bell(FIG1, c, 0.0) == pytest.approx((s.r11 + s.r44) / 2, abs=1e-15)


def test_bell_target_self_fidelity(bell):
    assert fidelity_pair(bell, bell_state_matrix()) == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("delta_q", [5.0, 2.0, 1e-9, 0.0])
def test_fidelity_two_paths(delta_q):
    p = SpinParams(J=1, delta_z=1, D_z=1, K_z=5, B=1, T=0.5)
    c = ChannelParams(lam=0.1, Delta_Q=delta_q, delta_o=1.0)
    t = np.linspace(0, 30, 301)
    rho_t = static_average(thermal_state(p), c, t).to_matrix()
    rho0 = thermal_state(p).to_matrix()
    assert np.max(np.abs(fidelity_to_initial(p, c, t) - fidelity_pair(rho_t, rho0[None]))) <= 1e-9
    assert np.max(np.abs(fidelity_to_bell(p, c, t) - fidelity_pair(rho_t, bell_state_matrix()[None]))) <= 1e-9


def test_negativity_of_xstate_closed_form(rng):
    # partial transpose swaps the coherences between the two 2x2 blocks
    def neg_part(a, b, c):
        return max(0.0, np.sqrt(((a - b) / 2) ** 2 + abs(c) ** 2) - (a + b) / 2)

    for _ in range(200):
        pops = rng.dirichlet(np.ones(4))
        r14 = np.sqrt(pops[0] * pops[3]) * rng.uniform() * np.exp(1j * rng.uniform(0, 2 * np.pi))
        r23 = np.sqrt(pops[1] * pops[2]) * rng.uniform() * np.exp(1j * rng.uniform(0, 2 * np.pi))
        s = XState(*pops, r14, r23)
        expected = 2 * (neg_part(pops[0], pops[3], r23) + neg_part(pops[1], pops[2], r14))
        assert negativity(s.to_matrix()) == pytest.approx(expected, abs=1e-12)
        assert l1_coherence(s.to_matrix()) == pytest.approx(2 * (abs(r14) + abs(r23)), abs=1e-12)


def test_measures_invariant_under_noise_mean():
    s = thermal_state(FIG1)
    t = np.linspace(0, 30, 400)
    base = static_average(s, ChannelParams(lam=0.1, Delta_Q=2.0, delta_o=0.0), t).to_matrix()
    for d0 in (1.0, 5.0):
        m = static_average(s, ChannelParams(lam=0.1, Delta_Q=2.0, delta_o=d0), t).to_matrix()
        for f in (negativity, l1_coherence, mixedness_entropy):
            assert np.max(np.abs(f(m) - f(base))) <= 1e-12


def test_uncertainty_depends_only_on_modulus_without_inner_coherence():
    # with r23 = 0 only |r14| enters the measured states
    s = thermal_state(SpinParams(J=0, D_z=0, K_z=5, B=1, delta_z=1, T=1))
    t = np.linspace(0, 30, 200)
    eu = [
        entropic_uncertainty(static_average(s, ChannelParams(lam=0.1, Delta_Q=2.0, delta_o=d0), t).to_matrix())
        for d0 in (0.0, 1.0, 5.0)
    ]
    assert np.max(np.abs(eu[1] - eu[0])) <= 1e-12
    assert np.max(np.abs(eu[2] - eu[0])) <= 1e-12


def test_measures_accept_stacks(bell):
    stack = np.stack([bell, MIXED, KET00])
    assert np.allclose(negativity(stack), [1, 0, 0], atol=1e-12)
    assert np.allclose(entropic_uncertainty(stack), [0, 2, 1], atol=1e-9)
    assert np.allclose(mixedness_entropy(stack), [0, 2, 0], atol=1e-9)


seeds = st.integers(min_value=0, max_value=2**32 - 1)


@settings(max_examples=80, deadline=None)
@given(seeds, st.integers(min_value=1, max_value=4))
def test_measure_ranges(seed, rank):
    rho = random_density_matrix(np.random.default_rng(seed), rank=rank)
    ng = negativity(rho)
    assert 0.0 <= ng <= 1.0
    assert (ng == 0.0) == bool(eigvalsh(partial_transpose_first(rho)).min() >= -1e-14)
    assert -1e-9 <= entropic_uncertainty(rho) <= 2 + 1e-9
    assert -1e-12 <= mixedness_entropy(rho) <= 2 + 1e-12
    assert negativity_raw(rho) >= 0.0


@settings(max_examples=80, deadline=None)
@given(seeds)
def test_uncertainty_of_pure_a_product(seed):
    rng = np.random.default_rng(seed)
    psi = rng.normal(size=2) + 1j * rng.normal(size=2)
    psi /= np.linalg.norm(psi)
    rho = np.kron(np.outer(psi, psi.conj()), random_density_matrix(rng, 2))
    assert entropic_uncertainty(rho) >= 1 - 1e-9
