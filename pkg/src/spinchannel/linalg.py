"""Small dense complex linear algebra for one- and two-qubit operators.

Every routine accepts a single matrix or a stack of matrices with shape
``(..., n, n)`` where ``n`` is 2 or 4. Two-qubit basis states are ordered
``|ab>`` -> index ``2a + b`` with ``a`` the first qubit.
"""

from __future__ import annotations

import numpy as np

HERMITIAN_TOL = 1e-10
JACOBI_TOL = 1e-13
JACOBI_MAX_SWEEPS = 100

# density-matrix validation
DM_HERMITIAN_TOL = 1e-12
DM_TRACE_TOL = 1e-12
DM_PSD_TOL = 1e-10
ZERO_EIGENVALUE = 1e-14


def _as_square(m, dims=(2, 4)) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim < 2 or m.shape[-1] != m.shape[-2] or m.shape[-1] not in dims:
        raise ValueError(f"expected square matrices of size {dims}, got shape {m.shape}")
    return m


def dagger(m: np.ndarray) -> np.ndarray:
    return np.conj(np.swapaxes(m, -1, -2))


def kron(a, b) -> np.ndarray:
    """Tensor product of two single-qubit operators (or stacks of them)."""
    a = _as_square(a, dims=(2,))
    b = _as_square(b, dims=(2,))
    out = a[..., :, None, :, None] * b[..., None, :, None, :]
    return out.reshape(np.broadcast_shapes(a.shape[:-2], b.shape[:-2]) + (4, 4))


def hermiticity_error(m) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    return np.max(np.abs(m - dagger(m)), axis=(-1, -2))


def hermitian_eigensystem(m, tol: float = JACOBI_TOL, max_sweeps: int = JACOBI_MAX_SWEEPS):
    """Eigenvalues and eigenvectors of Hermitian matrices by cyclic Jacobi rotations.

    Args:
        m: Hermitian matrix or stack of matrices, shape ``(..., n, n)``.
        tol: convergence threshold on the off-diagonal Frobenius norm,
            relative to ``max(1, ||m||_F)``.
        max_sweeps: iteration cap on full cyclic sweeps.

    Returns:
        ``(w, v)`` with real eigenvalues ``w`` sorted ascending along the last
        axis and orthonormal eigenvectors in the columns of ``v``, so that
        ``m @ v[..., :, k] == w[..., k] * v[..., :, k]``.

    Raises:
        ValueError: if the input is not Hermitian within 1e-10.
        numpy.linalg.LinAlgError: if the sweep cap is reached before convergence.
    """
    a = _as_square(m).copy()
    if np.any(hermiticity_error(a) > HERMITIAN_TOL):
        raise ValueError("hermitian_eigensystem requires a Hermitian matrix")
    batch = a.shape[:-2]
    n = a.shape[-1]
    a = a.reshape((-1, n, n))
    a = 0.5 * (a + dagger(a))
    v = np.broadcast_to(np.eye(n, dtype=complex), a.shape).copy()

    scale = np.maximum(1.0, np.linalg.norm(a, axis=(-1, -2)))
    offdiag = ~np.eye(n, dtype=bool)
    pairs = [(p, q) for p in range(n - 1) for q in range(p + 1, n)]

    for _ in range(max_sweeps):
        off = np.sqrt(np.sum(np.abs(a[:, offdiag]) ** 2, axis=-1))
        if np.all(off <= tol * scale):
            break
        for p, q in pairs:
            apq = a[:, p, q]
            r = np.abs(apq)
            # entries this small cannot move any eigenvalue
            active = r > 1e-32 * scale
            if not np.any(active):
                continue
            phase = np.where(active, apq / np.where(active, r, 1.0), 1.0)
            app = a[:, p, p].real
            aqq = a[:, q, q].real
            # smaller root of t^2 + 2 tau t - 1 = 0 keeps |theta| <= pi/4
            tau = (aqq - app) / (2.0 * np.where(active, r, 1.0))
            t = np.where(tau >= 0, 1.0, -1.0) / (np.abs(tau) + np.sqrt(1.0 + tau * tau))
            t = np.where(active, t, 0.0)
            c = 1.0 / np.sqrt(1.0 + t * t)
            s = t * c
            # G = diag(1, conj(phase)) @ [[c, s], [-s, c]]
            g00, g01 = c, s
            g10, g11 = -s * np.conj(phase), c * np.conj(phase)

            col_p, col_q = a[:, :, p].copy(), a[:, :, q].copy()
            a[:, :, p] = col_p * g00[:, None] + col_q * g10[:, None]
            a[:, :, q] = col_p * g01[:, None] + col_q * g11[:, None]
            row_p, row_q = a[:, p, :].copy(), a[:, q, :].copy()
            a[:, p, :] = np.conj(g00)[:, None] * row_p + np.conj(g10)[:, None] * row_q
            a[:, q, :] = np.conj(g01)[:, None] * row_p + np.conj(g11)[:, None] * row_q
            a[:, p, q] = np.where(active, 0.0, a[:, p, q])
            a[:, q, p] = np.where(active, 0.0, a[:, q, p])
            a[:, p, p] = a[:, p, p].real
            a[:, q, q] = a[:, q, q].real

            vp, vq = v[:, :, p].copy(), v[:, :, q].copy()
            v[:, :, p] = vp * g00[:, None] + vq * g10[:, None]
            v[:, :, q] = vp * g01[:, None] + vq * g11[:, None]
    else:
        off = np.sqrt(np.sum(np.abs(a[:, offdiag]) ** 2, axis=-1))
        if np.any(off > tol * scale):
            raise np.linalg.LinAlgError(
                f"Jacobi iteration did not converge in {max_sweeps} sweeps"
            )

    w = np.diagonal(a, axis1=-2, axis2=-1).real
    order = np.argsort(w, axis=-1, kind="stable")
    w = np.take_along_axis(w, order, axis=-1)
    v = np.take_along_axis(v, order[:, None, :], axis=-1)
    return w.reshape(batch + (n,)), v.reshape(batch + (n, n))


def eigvalsh(m) -> np.ndarray:
    return hermitian_eigensystem(m)[0]


def partial_transpose_first(m) -> np.ndarray:
    """Transpose over the first qubit: ``out[2a+b, 2c+d] = m[2c+b, 2a+d]``."""
    m = _as_square(m, dims=(4,))
    t = m.reshape(m.shape[:-2] + (2, 2, 2, 2))
    return np.swapaxes(t, -4, -2).reshape(m.shape)


def partial_transpose_second(m) -> np.ndarray:
    m = _as_square(m, dims=(4,))
    t = m.reshape(m.shape[:-2] + (2, 2, 2, 2))
    return np.swapaxes(t, -3, -1).reshape(m.shape)


def partial_trace(m, keep: str = "second") -> np.ndarray:
    """Reduce a two-qubit operator to one qubit.

    ``keep`` is ``"first"`` or ``"second"`` and names the qubit that survives.
    """
    m = _as_square(m, dims=(4,))
    t = m.reshape(m.shape[:-2] + (2, 2, 2, 2))
    if keep == "second":
        return np.einsum("...abad->...bd", t)
    if keep == "first":
        return np.einsum("...abcb->...ac", t)
    raise ValueError(f"keep must be 'first' or 'second', got {keep!r}")


def check_density_matrix(rho) -> np.ndarray:
    """Validate density matrices and return their eigenvalues.

    Raises ValueError when any matrix in the stack is not Hermitian, not of
    unit trace, or has an eigenvalue below -1e-10.
    """
    rho = _as_square(rho)
    if np.any(hermiticity_error(rho) > DM_HERMITIAN_TOL):
        raise ValueError("density matrix is not Hermitian")
    tr = np.trace(rho, axis1=-2, axis2=-1)
    if np.any(np.abs(tr - 1.0) > DM_TRACE_TOL):
        raise ValueError("density matrix does not have unit trace")
    w = eigvalsh(rho)
    if np.any(w < -DM_PSD_TOL):
        raise ValueError(f"density matrix is not positive semidefinite (min eigenvalue {w.min():.3g})")
    return w


def entropy_from_eigenvalues(w) -> np.ndarray:
    """Shannon entropy in bits of a spectrum, with 0 log 0 = 0."""
    w = np.asarray(w, dtype=float)
    if np.any(w < -DM_PSD_TOL):
        raise ValueError("negative eigenvalue in entropy")
    w = np.where(w < ZERO_EIGENVALUE, 0.0, w)
    safe = np.where(w > 0.0, w, 1.0)
    return 0.0 - np.sum(w * np.log2(safe), axis=-1)


def von_neumann_entropy(rho) -> np.ndarray | float:
    """Von Neumann entropy ``-Tr[rho log2 rho]`` in bits."""
    w = check_density_matrix(rho)
    s = entropy_from_eigenvalues(w)
    return float(s) if np.ndim(s) == 0 else s


def random_hermitian(rng: np.random.Generator, n: int = 4, scale: float = 1.0) -> np.ndarray:
    x = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return scale * 0.5 * (x + x.conj().T)


def random_unitary(rng: np.random.Generator, n: int = 4) -> np.ndarray:
    """Unitary ``exp(iH)`` for a random Hermitian ``H``, built from its eigensystem."""
    w, v = hermitian_eigensystem(random_hermitian(rng, n))
    return (v * np.exp(1j * w)) @ dagger(v)


def random_density_matrix(rng: np.random.Generator, n: int = 4, rank: int | None = None) -> np.ndarray:
    rank = n if rank is None else rank
    g = rng.normal(size=(n, rank)) + 1j * rng.normal(size=(n, rank))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real
