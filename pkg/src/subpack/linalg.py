"""Dense complex linear algebra at desk scale.

Matrices are plain ``numpy`` arrays of dtype ``complex128``; real data is
stored with zero imaginary parts. Eigenvalues and singular values come from
cyclic Jacobi iterations written here rather than LAPACK, so results depend
only on this code and IEEE arithmetic.
"""
from __future__ import annotations

import numpy as np

from .errors import DomainError, RankError, SizeError
from .tolerance import Tolerance, as_tol

MAX_ENTRIES = 10**8
MAX_SWEEPS = 100
JACOBI_EPS = 1e-14


def as_matrix(a) -> np.ndarray:
    """Coerce ``a`` to a finite 2-D complex128 array (copying)."""
    m = np.array(a, dtype=np.complex128)
    if m.ndim != 2:
        raise SizeError(f"expected a 2-D matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise DomainError("matrix contains NaN or Inf")
    return m


def adjoint(a) -> np.ndarray:
    return as_matrix(a).conj().T


def kron(a, b) -> np.ndarray:
    """Kronecker product: block (i, j) of the result is ``a[i, j] * b``."""
    a = as_matrix(a)
    b = as_matrix(b)
    (r, s), (p, q) = a.shape, b.shape
    if r * p * s * q > MAX_ENTRIES:
        raise SizeError(f"kron result {r * p}x{s * q} exceeds {MAX_ENTRIES} entries")
    blocks = a[:, None, :, None] * b[None, :, None, :]
    return blocks.reshape(r * p, s * q)


def max_abs(a) -> float:
    a = np.asarray(a)
    return float(np.max(np.abs(a))) if a.size else 0.0


def hermitian_deviation(a) -> float:
    a = as_matrix(a)
    return max_abs(a - a.conj().T)


def _rotation(app: float, aqq: float, apq: complex) -> np.ndarray:
    """2x2 unitary G with (G* [[app, apq], [conj(apq), aqq]] G) diagonal."""
    mag = abs(apq)
    phase = apq / mag
    theta = (aqq - app) / (2.0 * mag)
    t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
    if theta < 0:
        t = -t
    c = 1.0 / np.sqrt(t * t + 1.0)
    s = t * c
    # diag(1, conj(phase)) makes the coupling real, then a real Givens step
    return np.array([[c, s], [-s * np.conj(phase), c * np.conj(phase)]], dtype=np.complex128)


def hermitian_eigenvalues(a, tol: Tolerance | float | None = None) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix in non-increasing order."""
    a = as_matrix(a)
    t = as_tol(tol)
    n, cols = a.shape
    if n != cols:
        raise DomainError(f"matrix must be square, got {n}x{cols}")
    dev = hermitian_deviation(a)
    if dev > t:
        raise DomainError(f"matrix is not Hermitian: max |a - a*| = {dev:.3e} > {t:.3e}")
    a = 0.5 * (a + a.conj().T)
    thresh = JACOBI_EPS * max_abs(a)
    for _ in range(MAX_SWEEPS):
        off = np.abs(a - np.diag(np.diag(a)))
        if n < 2 or off.max() <= thresh:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= thresh:
                    continue
                g = _rotation(a[p, p].real, a[q, q].real, apq)
                idx = [p, q]
                a[:, idx] = a[:, idx] @ g
                a[idx, :] = g.conj().T @ a[idx, :]
                a[q, p] = a[p, q] = 0.0
    return np.sort(np.diag(a).real)[::-1].copy()


def jacobi_svd(a) -> tuple[np.ndarray, np.ndarray]:
    """One-sided (Hestenes) Jacobi on the columns of ``a``.

    Returns ``(w, v)`` with ``a @ v == w``, ``v`` unitary and the columns of
    ``w`` mutually orthogonal; the column norms of ``w`` are the singular
    values (padded with zeros when ``a`` is wide).
    """
    w = as_matrix(a)
    cols = w.shape[1]
    v = np.eye(cols, dtype=np.complex128)
    for _ in range(MAX_SWEEPS):
        rotated = False
        for p in range(cols - 1):
            for q in range(p + 1, cols):
                alpha = float(np.vdot(w[:, p], w[:, p]).real)
                beta = float(np.vdot(w[:, q], w[:, q]).real)
                gamma = complex(np.vdot(w[:, p], w[:, q]))
                if abs(gamma) <= JACOBI_EPS * np.sqrt(alpha * beta) or abs(gamma) < 1e-300:
                    continue
                rotated = True
                mag = abs(gamma)
                phase = np.conj(gamma / mag)
                zeta = (beta - alpha) / (2.0 * mag)
                t = 1.0 / (abs(zeta) + np.sqrt(1.0 + zeta * zeta))
                if zeta < 0:
                    t = -t
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = c * t
                g = np.array([[c, s], [-s * phase, c * phase]], dtype=np.complex128)
                idx = [p, q]
                w[:, idx] = w[:, idx] @ g
                v[:, idx] = v[:, idx] @ g
        if not rotated:
            break
    return w, v


def singular_values(a) -> np.ndarray:
    """The min(rows, cols) singular values, non-increasing."""
    a = as_matrix(a)
    rows, cols = a.shape
    if rows < cols:
        a = a.conj().T
    w, _ = jacobi_svd(a)
    s = np.sort(np.linalg.norm(w, axis=0))[::-1]
    return s[: min(rows, cols)].copy()


def _fix_phases(q: np.ndarray, tol: float) -> np.ndarray:
    # make the first entry of each column exceeding tol real-positive
    for j in range(q.shape[1]):
        col = q[:, j]
        lead = np.flatnonzero(np.abs(col) > tol)
        if lead.size:
            x = col[lead[0]]
            q[:, j] = col * (np.conj(x) / abs(x))
            q[lead[0], j] = abs(q[lead[0], j])
    return q


def _gram_schmidt(a: np.ndarray) -> np.ndarray:
    q = a.copy()
    for j in range(q.shape[1]):
        for _ in range(2):
            for i in range(j):
                q[:, j] -= np.vdot(q[:, i], q[:, j]) * q[:, i]
        q[:, j] /= np.linalg.norm(q[:, j])
    return q


def numerical_rank(a, tol: Tolerance | float | None = None) -> int:
    s = singular_values(a)
    if s.size == 0 or s[0] == 0.0:
        return 0
    return int(np.count_nonzero(s > as_tol(tol) * s[0]))


def orthonormalize(a, tol: Tolerance | float | None = None) -> np.ndarray:
    """Orthonormal basis of the column span of a full-column-rank matrix.

    Columns are processed in their given order (modified Gram-Schmidt with
    one reorthogonalization pass); the leading nonzero entry of each output
    column is made real-positive.
    """
    a = as_matrix(a)
    t = as_tol(tol)
    cols = a.shape[1]
    rank = numerical_rank(a, t) if cols else 0
    if rank < cols:
        raise RankError(
            f"matrix with {cols} columns has numerical rank {rank} at tolerance {t:.3e}", rank
        )
    return _fix_phases(_gram_schmidt(a), t)


def null_space_basis(a, tol: Tolerance | float | None = None) -> np.ndarray:
    """Orthonormal basis (as columns) of the kernel {x : a x = 0}."""
    a = as_matrix(a)
    t = as_tol(tol)
    w, v = jacobi_svd(a)
    norms = np.linalg.norm(w, axis=0)
    top = norms.max() if norms.size else 0.0
    kernel = v[:, norms <= t * top] if top > 0 else v
    if kernel.shape[1] == 0:
        return np.zeros((a.shape[1], 0), dtype=np.complex128)
    return _fix_phases(_gram_schmidt(kernel), t)


def unitary_deviation(u) -> float:
    """max |U* U - I|."""
    u = as_matrix(u)
    return max_abs(u.conj().T @ u - np.eye(u.shape[1]))
