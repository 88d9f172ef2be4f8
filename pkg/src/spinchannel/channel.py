"""Classical dephasing field with static noise acting on both qubits.

Each qubit sees ``H_P = eps + Delta_P * lam * sigma_z``. For identical
channels only the ``|00><11|`` coherence picks up a phase, and averaging that
phase over a uniform disorder window of width ``Delta_Q`` around
``delta_o`` damps it by a sinc envelope.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .linalg import kron
from .spin import XState

SINC_TAYLOR_BELOW = 1e-6


@dataclass(frozen=True)
class ChannelParams:
    """Coupling ``lam``, disorder width ``Delta_Q``, noise mean ``delta_o``, splitting ``epsilon``."""

    lam: float = 1.0
    Delta_Q: float = 1.0
    delta_o: float = 1.0
    epsilon: float = 1.0

    def __post_init__(self):
        if not self.Delta_Q >= 0:
            raise ValueError(f"disorder width Delta_Q must be >= 0, got {self.Delta_Q}")


def _check_time(t):
    t = np.asarray(t, dtype=float)
    if np.any(t < 0):
        raise ValueError("time must be non-negative")
    return t


def field_hamiltonian(c: ChannelParams, Delta_X: float, Delta_Y: float) -> np.ndarray:
    """``H_X (x) I + I (x) H_Y`` with ``H_P = diag(eps + Delta_P lam, eps - Delta_P lam)``."""
    hx = np.diag([Delta_X * c.lam + c.epsilon, c.epsilon - Delta_X * c.lam])
    hy = np.diag([Delta_Y * c.lam + c.epsilon, c.epsilon - Delta_Y * c.lam])
    return kron(hx, np.eye(2)) + kron(np.eye(2), hy)


def field_propagator(c: ChannelParams, Delta_X: float, Delta_Y: float, t) -> np.ndarray:
    """``exp(-i H t)`` of :func:`field_hamiltonian`; diagonal, so exact."""
    t = _check_time(t)
    e = np.diagonal(field_hamiltonian(c, Delta_X, Delta_Y)).real
    phases = np.exp(-1j * t[..., None] * e)
    out = np.zeros(t.shape + (4, 4), dtype=complex)
    idx = np.arange(4)
    out[..., idx, idx] = phases
    return out


def evolution_unitary(c: ChannelParams, Delta_X: float, Delta_Y: float, t: float) -> np.ndarray:
    """Four-entry symmetric two-qubit unitary built from cos/sin of ``Delta lam t``.

    The matrix equals ``exp(-2i eps t) * exp(-i Delta_X lam t sx) (x) exp(-i Delta_Y lam t sx)``.
    It is kept with its printed entries; :func:`evolve_state` uses the
    diagonal propagator of :func:`field_hamiltonian` instead.
    """
    t = float(_check_time(t))
    g = np.exp(-2j * t * c.epsilon)
    cx, sx = np.cos(Delta_X * c.lam * t), np.sin(Delta_X * c.lam * t)
    cy, sy = np.cos(Delta_Y * c.lam * t), np.sin(Delta_Y * c.lam * t)
    u11 = g * cx * cy
    u12 = -1j * g * cx * sy
    u13 = -1j * g * sx * cy
    u14 = -g * sx * sy
    return np.array(
        [
            [u11, u12, u13, u14],
            [u12, u11, u14, u13],
            [u13, u14, u11, u12],
            [u14, u13, u12, u11],
        ]
    )


def evolve_state(s: XState, c: ChannelParams, Delta_X: float, t) -> XState:
    """Evolve under identical sub-channels ``Delta_X = Delta_Y`` for a fixed noise level."""
    t = _check_time(t)
    return replace(s, r14=s.r14 * np.exp(-4j * Delta_X * c.lam * t))


def sinc_dephasing_factor(Delta_Q, lam, t):
    """``sin(x)/x`` with ``x = 2 Delta_Q lam t``, using ``1 - x^2/6`` near zero."""
    x = 2.0 * np.asarray(Delta_Q, dtype=float) * lam * np.asarray(t, dtype=float)
    small = np.abs(x) < SINC_TAYLOR_BELOW
    safe = np.where(small, 1.0, x)
    out = np.where(small, 1.0 - x * x / 6.0, np.sin(safe) / safe)
    return float(out) if out.ndim == 0 else out


def static_average(s: XState, c: ChannelParams, t) -> XState:
    """Average :func:`evolve_state` over a uniform noise window of width ``Delta_Q``.

    ``t`` may be an array; the returned state then carries one ``r14`` per time.
    """
    t = _check_time(t)
    damp = sinc_dephasing_factor(c.Delta_Q, c.lam, t)
    r14 = s.r14 * np.exp(-4j * c.delta_o * c.lam * t) * damp
    if np.ndim(r14) == 0:
        r14 = complex(r14)
    return replace(s, r14=r14)
