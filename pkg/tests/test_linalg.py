import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spinchannel.linalg import (
    hermitian_eigensystem,
    kron,
    partial_trace,
    partial_transpose_first,
    partial_transpose_second,
    random_density_matrix,
    random_hermitian,
    random_unitary,
    von_neumann_entropy,
)

I2 = np.eye(2)
SX = np.array([[0, 1], [1, 0]])
SZ = np.diag([1, -1])


def brute_partial_transpose(m):
    out = np.zeros((4, 4), dtype=complex)
    for a in range(2):
        for b in range(2):
            for c in range(2):
                for d in range(2):
                    out[2 * a + b, 2 * c + d] = m[2 * c + b, 2 * a + d]
    return out


def test_kron_basic_cases():
    assert np.array_equal(kron(I2, I2), np.eye(4))
    assert np.array_equal(kron(SZ, I2), np.diag([1, 1, -1, -1]))
    assert np.array_equal(kron(SX, SX), np.fliplr(np.eye(4)))


def test_kron_index_convention(rng):
    a = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    b = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    out = kron(a, b)
    for i, j, k, l in np.ndindex(2, 2, 2, 2):
        assert out[2 * i + k, 2 * j + l] == pytest.approx(a[i, j] * b[k, l], abs=1e-15)


def test_kron_rejects_wrong_dimension():
    with pytest.raises(ValueError):
        kron(np.eye(4), I2)


def test_eigensystem_diagonal_and_identity():
    w, v = hermitian_eigensystem(np.diag([3.0, 1.0, 2.0, 0.0]))
    assert np.array_equal(w, [0.0, 1.0, 2.0, 3.0])
    assert np.allclose(np.abs(v), np.eye(4)[:, [3, 1, 2, 0]])
    assert np.array_equal(hermitian_eigensystem(np.eye(4))[0], np.ones(4))


def test_eigensystem_rejects_non_hermitian():
    with pytest.raises(ValueError):
        hermitian_eigensystem(np.array([[0, 1], [0, 0]]))


def test_eigensystem_sweep_cap():
    with pytest.raises(np.linalg.LinAlgError):
        hermitian_eigensystem(random_hermitian(np.random.default_rng(1)), max_sweeps=1)


def test_eigensystem_random_batch(rng):
    h = np.array([random_hermitian(rng, 4, scale=s) for s in np.geomspace(1e-3, 1e2, 200)])
    w, v = hermitian_eigensystem(h)
    assert np.all(np.diff(w, axis=-1) >= 0)
    assert np.max(np.abs(h @ v - v * w[:, None, :])) <= 1e-10
    assert np.max(np.abs(np.conj(np.swapaxes(v, -1, -2)) @ v - np.eye(4))) <= 1e-10
    assert np.allclose(w.sum(-1), np.trace(h, axis1=-2, axis2=-1).real, atol=1e-10)
    assert np.allclose(w, np.linalg.eigvalsh(h), atol=1e-10)


def test_eigensystem_degenerate():
    h = np.zeros((4, 4), dtype=complex)
    h[0, 3], h[3, 0] = 1j, -1j
    w, v = hermitian_eigensystem(h)
    assert np.allclose(w, [-1, 0, 0, 1], atol=1e-14)
    assert np.allclose(h @ v, v * w, atol=1e-12)


def test_partial_transpose_matches_brute_force(rng):
    m = random_density_matrix(rng)
    assert np.array_equal(partial_transpose_first(m), brute_partial_transpose(m))


def test_partial_transpose_cases(bell, rng):
    d = np.diag([0.1, 0.2, 0.3, 0.4]).astype(complex)
    assert np.array_equal(partial_transpose_first(d), d)
    assert np.linalg.eigvalsh(brute_partial_transpose(bell)).min() == pytest.approx(-0.5, abs=1e-12)
    assert hermitian_eigensystem(partial_transpose_first(bell))[0][0] == pytest.approx(-0.5, abs=1e-12)
    m = random_density_matrix(rng)
    assert np.array_equal(partial_transpose_first(partial_transpose_first(m)), m)


def test_partial_trace_cases(bell, rng):
    assert np.allclose(partial_trace(np.eye(4) / 4, keep="second"), I2 / 2)
    assert np.allclose(partial_trace(bell, keep="second"), I2 / 2)
    ra, rb = random_density_matrix(rng, 2), random_density_matrix(rng, 2)
    prod = np.kron(ra, rb)
    assert np.max(np.abs(partial_trace(prod, keep="second") - rb)) <= 1e-12
    assert np.max(np.abs(partial_trace(prod, keep="first") - ra)) <= 1e-12
    with pytest.raises(ValueError):
        partial_trace(prod, keep="both")


def test_entropy_cases():
    pure = np.zeros((4, 4))
    pure[0, 0] = 1
    assert von_neumann_entropy(pure) == 0.0
    assert von_neumann_entropy(np.eye(4) / 4) == pytest.approx(2.0, abs=1e-12)
    assert von_neumann_entropy(np.diag([0.5, 0.5, 0, 0])) == pytest.approx(1.0, abs=1e-12)
    with pytest.raises(ValueError):
        von_neumann_entropy(np.diag([1.2, -0.2, 0, 0]))
    with pytest.raises(ValueError):
        von_neumann_entropy(np.diag([0.5, 0.4, 0, 0]))


seeds = st.integers(min_value=0, max_value=2**32 - 1)


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_partial_transpose_properties(seed):
    rng = np.random.default_rng(seed)
    m = random_density_matrix(rng)
    pt = partial_transpose_first(m)
    assert np.trace(pt) == pytest.approx(np.trace(m), abs=1e-12)
    assert np.max(np.abs(pt - pt.conj().T)) <= 1e-12
    w1 = hermitian_eigensystem(pt)[0]
    w2 = hermitian_eigensystem(partial_transpose_second(m))[0]
    assert np.allclose(w1, w2, atol=1e-10)


@settings(max_examples=60, deadline=None)
@given(seeds, st.integers(min_value=1, max_value=4))
def test_entropy_unitary_invariance(seed, rank):
    rng = np.random.default_rng(seed)
    rho = random_density_matrix(rng, rank=rank)
    u = random_unitary(rng)
    rotated = u @ rho @ u.conj().T
    rotated = 0.5 * (rotated + rotated.conj().T)
    assert abs(von_neumann_entropy(rotated) - von_neumann_entropy(rho)) <= 1e-9
