"""Two-qubit XXZ Heisenberg model with DM, KSEA and magnetic-field terms.

Units are hbar = k_B = 1. The Hamiltonian is block diagonal in the
computational basis: an outer block on {|00>, |11>} carrying the field ``B``
and the KSEA coupling ``K_z``, and an inner block on {|01>, |10>} carrying the
exchange ``J`` and the DM coupling ``D_z``. Its Gibbs state is therefore an
X-state.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import dagger, hermitian_eigensystem

XSTATE_TOL = 1e-12
XPOSITIVITY_TOL = 1e-10


@dataclass(frozen=True)
class SpinParams:
    J: float = 1.0
    delta_z: float = 1.0
    D_z: float = 1.0
    K_z: float = 5.0
    B: float = 1.0
    T: float = 1.0


@dataclass(frozen=True)
class DerivedScales:
    Lambda: float
    upsilon: float
    phi: float
    varpi: float
    Z: float


def derived_scales(p: SpinParams) -> DerivedScales:
    """Spectral gaps of both blocks, their thermal ratios and the partition function.

    ``Z`` can overflow for very low temperatures; :func:`thermal_state`
    does not use it and stays finite.
    """
    if p.T <= 0:
        raise ValueError(f"temperature must be positive, got T={p.T}")
    lam = 2.0 * np.hypot(p.B, p.K_z)
    ups = 2.0 * np.hypot(p.J, p.D_z)
    phi, varpi = lam / p.T, ups / p.T
    with np.errstate(over="ignore"):
        z = 2.0 * np.exp(-p.delta_z / p.T) * (np.exp(2.0 * p.delta_z / p.T) * np.cosh(varpi) + np.cosh(phi))
    return DerivedScales(Lambda=lam, upsilon=ups, phi=phi, varpi=varpi, Z=float(z))


def build_hamiltonian(p: SpinParams) -> np.ndarray:
    h = np.zeros((4, 4), dtype=complex)
    h[0, 0] = 2 * p.B + p.delta_z
    h[1, 1] = h[2, 2] = -p.delta_z
    h[3, 3] = -2 * p.B + p.delta_z
    h[0, 3] = -2j * p.K_z
    h[3, 0] = 2j * p.K_z
    h[1, 2] = 2j * p.D_z + 2 * p.J
    h[2, 1] = -2j * p.D_z + 2 * p.J
    return h


def _fix_phase(vec: np.ndarray) -> np.ndarray:
    vec = vec / np.linalg.norm(vec)
    k = np.flatnonzero(np.abs(vec) > 1e-12)[0]
    return vec * (abs(vec[k]) / vec[k])


def _block_vectors(block: np.ndarray, idx: tuple[int, int]) -> tuple[np.ndarray, np.ndarray]:
    # numeric fallback for a degenerate 2x2 block; returns (upper, lower)
    _, v = hermitian_eigensystem(block)
    out = []
    for k in (1, 0):
        vec = np.zeros(4, dtype=complex)
        vec[list(idx)] = v[:, k]
        out.append(_fix_phase(vec))
    return out[0], out[1]


def hamiltonian_spectrum(p: SpinParams) -> tuple[np.ndarray, np.ndarray]:
    """Closed-form energies and eigenvectors.

    Returns ``(energies, states)`` ordered as
    ``(delta_z + Lambda, -delta_z + upsilon, -delta_z - upsilon, delta_z - Lambda)``
    with ``states[:, k]`` the matching eigenvector. Each vector has its first
    nonzero component real and positive. Blocks where the closed form is 0/0
    (``K_z = 0`` or ``J = D_z = 0``) are diagonalised numerically.
    """
    lam = 2.0 * np.hypot(p.B, p.K_z)
    ups = 2.0 * np.hypot(p.J, p.D_z)
    energies = np.array([p.delta_z + lam, -p.delta_z + ups, -p.delta_z - ups, p.delta_z - lam])
    h = build_hamiltonian(p)

    if lam > 0 and min(lam + 2 * p.B, lam - 2 * p.B) > 1e-12 * lam:
        theta1 = np.zeros(4, dtype=complex)
        theta1[0], theta1[3] = 1.0, 2j * p.K_z / (lam + 2 * p.B)
        theta1 *= np.sqrt((lam + 2 * p.B) / (2 * lam))
        theta4 = np.zeros(4, dtype=complex)
        theta4[0], theta4[3] = 1.0, -2j * p.K_z / (lam - 2 * p.B)
        theta4 *= np.sqrt((lam - 2 * p.B) / (2 * lam))
    else:
        theta1, theta4 = _block_vectors(h[np.ix_([0, 3], [0, 3])], (0, 3))

    if ups > 0:
        # H[1,2] = 2J + 2iD, so the |10> amplitude carries the conjugate phase
        w = (2 * p.J - 2j * p.D_z) / ups
        theta2 = np.array([0, 1, w, 0], dtype=complex) / np.sqrt(2)
        theta3 = np.array([0, 1, -w, 0], dtype=complex) / np.sqrt(2)
    else:
        theta2, theta3 = _block_vectors(h[np.ix_([1, 2], [1, 2])], (1, 2))

    states = np.column_stack([_fix_phase(v) for v in (theta1, theta2, theta3, theta4)])
    return energies, states


@dataclass(frozen=True)
class XState:
    """Two-qubit density matrix supported on the diagonal and anti-diagonal.

    Fields may be scalars or broadcast-compatible arrays, in which case the
    object describes a stack of states (e.g. one per time point).
    """

    r11: float | np.ndarray
    r22: float | np.ndarray
    r33: float | np.ndarray
    r44: float | np.ndarray
    r14: complex | np.ndarray
    r23: complex | np.ndarray

    def to_matrix(self) -> np.ndarray:
        fields = np.broadcast_arrays(
            *(np.asarray(x, dtype=complex) for x in (self.r11, self.r22, self.r33, self.r44, self.r14, self.r23))
        )
        r11, r22, r33, r44, r14, r23 = fields
        m = np.zeros(r11.shape + (4, 4), dtype=complex)
        m[..., 0, 0], m[..., 1, 1], m[..., 2, 2], m[..., 3, 3] = r11, r22, r33, r44
        m[..., 0, 3], m[..., 3, 0] = r14, np.conj(r14)
        m[..., 1, 2], m[..., 2, 1] = r23, np.conj(r23)
        return m

    @classmethod
    def from_matrix(cls, m) -> XState:
        m = np.asarray(m, dtype=complex)
        mask = np.zeros((4, 4), dtype=bool)
        mask[[0, 1, 2, 3, 0, 3, 1, 2], [0, 1, 2, 3, 3, 0, 2, 1]] = True
        if np.any(np.abs(m[..., ~mask]) > XSTATE_TOL):
            raise ValueError("matrix is not of X form")
        return cls(
            r11=m[..., 0, 0].real, r22=m[..., 1, 1].real, r33=m[..., 2, 2].real, r44=m[..., 3, 3].real,
            r14=m[..., 0, 3], r23=m[..., 1, 2],
        )

    def validate(self) -> XState:
        pops = [np.asarray(x, dtype=float) for x in (self.r11, self.r22, self.r33, self.r44)]
        if np.any(np.abs(sum(pops) - 1.0) > XSTATE_TOL):
            raise ValueError("X-state populations do not sum to one")
        if any(np.any(x < -XSTATE_TOL) for x in pops):
            raise ValueError("X-state has a negative population")
        if np.any(np.abs(self.r14) ** 2 > pops[0] * pops[3] + XPOSITIVITY_TOL) or np.any(
            np.abs(self.r23) ** 2 > pops[1] * pops[2] + XPOSITIVITY_TOL
        ):
            raise ValueError("X-state coherences violate positivity")
        return self


def thermal_state(p: SpinParams) -> XState:
    """Gibbs state ``exp(-H/T)/Z`` from its closed-form entries.

    Exponentials are shifted by the ground-state energy, which leaves the
    ratios unchanged and keeps low temperatures finite.
    """
    if p.T <= 0:
        raise ValueError(f"temperature must be positive, got T={p.T}")
    T = p.T
    rad_bk = np.hypot(p.B, p.K_z)
    rad_jd = np.hypot(p.J, p.D_z)
    phi = 2 * rad_bk / T
    varpi = 2 * rad_jd / T
    shift = max(-p.delta_z / T + phi, p.delta_z / T + varpi)

    # e^{-dz/T} cosh(phi), e^{-dz/T} sinh(phi), e^{dz/T} cosh(varpi), e^{dz/T} sinh(varpi)
    up, dn = np.exp(-p.delta_z / T + phi - shift), np.exp(-p.delta_z / T - phi - shift)
    c_out, s_out = 0.5 * (up + dn), 0.5 * (up - dn)
    up, dn = np.exp(p.delta_z / T + varpi - shift), np.exp(p.delta_z / T - varpi - shift)
    c_in, s_in = 0.5 * (up + dn), 0.5 * (up - dn)
    z = 2 * c_out + 2 * c_in

    b_ratio = p.B / rad_bk if rad_bk > 0 else 0.0
    r14 = 1j * p.K_z * s_out / (z * rad_bk) if rad_bk > 0 else 0j
    r23 = (-p.J - 1j * p.D_z) * s_in / (z * rad_jd) if rad_jd > 0 else 0j
    return XState(
        r11=(c_out - b_ratio * s_out) / z,
        r22=c_in / z,
        r33=c_in / z,
        r44=(c_out + b_ratio * s_out) / z,
        r14=complex(r14),
        r23=complex(r23),
    )


def gibbs_matrix(p: SpinParams) -> np.ndarray:
    """Reference Gibbs state from the numeric eigensystem of the Hamiltonian."""
    if p.T <= 0:
        raise ValueError(f"temperature must be positive, got T={p.T}")
    w, v = hermitian_eigensystem(build_hamiltonian(p))
    boltz = np.exp(-(w - w.min()) / p.T)
    rho = (v * boltz) @ dagger(v)
    return rho / boltz.sum()


def thermal_state_eigenvalues(s: XState) -> np.ndarray:
    """Spectrum of an X-state, ordered (outer +, outer -, inner +, inner -)."""
    r11, r22, r33, r44 = (np.asarray(x, dtype=float) for x in (s.r11, s.r22, s.r33, s.r44))
    d_out = np.sqrt((r11 - r44) ** 2 + 4 * np.abs(s.r14) ** 2)
    d_in = np.sqrt((r22 - r33) ** 2 + 4 * np.abs(s.r23) ** 2)
    return np.stack(
        np.broadcast_arrays(
            0.5 * (r11 + r44 + d_out), 0.5 * (r11 + r44 - d_out),
            0.5 * (r22 + r33 + d_in), 0.5 * (r22 + r33 - d_in),
        ),
        axis=-1,
    )
