"""Entanglement, coherence, uncertainty, mixedness and fidelity of two-qubit states.

All state arguments are density matrices of shape ``(4, 4)`` or stacks
``(..., 4, 4)``; scalar inputs give Python floats, stacks give arrays.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channel import ChannelParams, sinc_dephasing_factor
from .linalg import (
    ZERO_EIGENVALUE,
    check_density_matrix,
    eigvalsh,
    entropy_from_eigenvalues,
    partial_trace,
    partial_transpose_first,
)
from .spin import SpinParams, thermal_state

MEASURES = ("NG", "EU", "LC", "EN", "FID1", "FID2")

BELL_PHI_PLUS = np.array([1, 0, 0, 1], dtype=complex) / np.sqrt(2)

_P0 = np.diag([1.0, 0.0]).astype(complex)
_P1 = np.diag([0.0, 1.0]).astype(complex)
_PPLUS = 0.5 * np.array([[1, 1], [1, 1]], dtype=complex)
_PMINUS = 0.5 * np.array([[1, -1], [-1, 1]], dtype=complex)
SIGMA_Z_PROJECTORS = (_P0, _P1)
SIGMA_X_PROJECTORS = (_PPLUS, _PMINUS)


@dataclass(frozen=True)
class MeasureRecord:
    """Measures at one time point; a measure that was not requested is ``None``."""

    t: float
    NG: float | None = None
    EU: float | None = None
    LC: float | None = None
    EN: float | None = None
    FID1: float | None = None
    FID2: float | None = None


def _scalar(x):
    x = x + 0.0  # drop signed zeros
    return float(x) if np.ndim(x) == 0 else x


def negativity_raw(rho) -> np.ndarray | float:
    """``2 * sum |negative eigenvalues|`` of the partial transpose, unclamped.

    Eigenvalues within 1e-14 of zero count as zero.
    """
    check_density_matrix(rho)
    w = eigvalsh(partial_transpose_first(rho))
    neg = np.where(w < -ZERO_EIGENVALUE, w, 0.0)
    return _scalar(-2.0 * np.sum(neg, axis=-1))


def negativity(rho):
    return _scalar(np.clip(negativity_raw(rho), 0.0, 1.0))


def l1_coherence(rho):
    rho = np.asarray(rho, dtype=complex)
    mag = np.abs(rho)
    return _scalar(np.sum(mag, axis=(-1, -2)) - np.sum(np.diagonal(mag, axis1=-2, axis2=-1), axis=-1))


def _entropy(rho) -> np.ndarray:
    return entropy_from_eigenvalues(eigvalsh(rho))


def measured_state(rho, projectors) -> np.ndarray:
    """Post-measurement state ``sum_i (P_i (x) I) rho (P_i (x) I)`` for a measurement on qubit A."""
    rho = np.asarray(rho, dtype=complex)
    eye = np.eye(2)
    out = np.zeros_like(rho)
    for proj in projectors:
        big = np.kron(proj, eye)
        out = out + big @ rho @ big
    return out


def conditional_entropy(rho, projectors) -> np.ndarray | float:
    """``S(O|B) = S(rho_OB) - S(rho_B)`` with qubit B (second) as the memory."""
    check_density_matrix(rho)
    return _scalar(_entropy(measured_state(rho, projectors)) - _entropy(partial_trace(rho, keep="second")))


def entropic_uncertainty(rho):
    """``S(X|B) + S(Z|B)`` for Pauli X and Z measured on qubit A, memory on qubit B."""
    check_density_matrix(rho)
    s_b = _entropy(partial_trace(rho, keep="second"))
    s_x = _entropy(measured_state(rho, SIGMA_X_PROJECTORS))
    s_z = _entropy(measured_state(rho, SIGMA_Z_PROJECTORS))
    return _scalar(s_x + s_z - 2.0 * s_b)


def mixedness_entropy(rho):
    """``-Tr[rho log2 rho]`` in bits."""
    return _scalar(entropy_from_eigenvalues(check_density_matrix(rho)))


def fidelity_pair(rho, sigma):
    """``Tr[rho sigma] + 2 sqrt(det rho * det sigma)``.

    Determinants come from the spectra and their product is clamped at zero
    before the square root.
    """
    w_rho = check_density_matrix(rho)
    w_sigma = check_density_matrix(sigma)
    overlap = np.einsum("...ij,...ji->...", np.asarray(rho, dtype=complex), np.asarray(sigma, dtype=complex)).real
    dets = np.prod(w_rho, axis=-1) * np.prod(w_sigma, axis=-1)
    return _scalar(overlap + 2.0 * np.sqrt(np.maximum(dets, 0.0)))


def fidelity_to_initial(p: SpinParams, c: ChannelParams, t):
    """Fidelity between the dephased thermal state at time ``t`` and the thermal state itself.

    Closed form ``X1 + X2 + X3``. The ``sin(2 Delta_Q lam t) / (Delta_Q lam t)``
    ratios are written as twice the guarded sinc factor, so ``t = 0`` and
    ``Delta_Q = 0`` are regular.
    """
    t = np.asarray(t, dtype=float)
    s = thermal_state(p)
    r11, r22, r33, r44 = s.r11, s.r22, s.r33, s.r44
    a14 = abs(s.r14) ** 2
    a23 = abs(s.r23) ** 2
    sinc = sinc_dephasing_factor(c.Delta_Q, c.lam, t)

    x1 = r11**2 + r22**2 + r33**2 + r44**2 + 2 * a23
    x2 = a14 * np.cos(4 * c.delta_o * c.lam * t) * 2 * sinc
    # (a14 sin^2 x - x^2 r11 r44) / (Delta_Q^2 lam^2 t^2) = 4 (a14 sinc^2 - r11 r44), x = 2 Delta_Q lam t
    radicand = (a14 - r11 * r44) * (r22 * r33 - a23) ** 2 * 4 * (a14 * sinc**2 - r11 * r44)
    x3 = np.sqrt(np.maximum(radicand, 0.0))
    return _scalar(x1 + x2 + x3)


def fidelity_to_bell(p: SpinParams, c: ChannelParams, t):
    """Fidelity between the dephased thermal state and ``(|00> + |11>)/sqrt(2)``."""
    t = np.asarray(t, dtype=float)
    s = thermal_state(p)
    sinc = sinc_dephasing_factor(c.Delta_Q, c.lam, t)
    phase = 4 * c.delta_o * c.lam * t
    value = 0.25 * (
        2 * (s.r11 + s.r44)
        + np.exp(-1j * phase) * 2 * sinc * (s.r14 + np.conj(s.r14) * np.exp(2j * phase))
    )
    if np.any(np.abs(np.imag(value)) > 1e-12):
        raise ArithmeticError("Bell-state fidelity has a non-negligible imaginary part")
    return _scalar(np.real(value))


def bell_state_matrix() -> np.ndarray:
    return np.outer(BELL_PHI_PLUS, BELL_PHI_PLUS.conj())
