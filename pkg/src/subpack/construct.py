"""Building new packings from old ones.

* :func:`tensor_with_unitaries` replaces each basis vector e of W_i by the
  r columns of ``e (x) U_i``, giving n subspaces of dimension rm in F^{rk}.
* :func:`tensor_packings` does the same with U_i an orthonormal basis of the
  i-th subspace of a second packing (a partial isometry rather than a unitary).
* :func:`complement` takes orthogonal complements subspace by subspace.
"""
from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import DomainError, FieldError, ParameterMismatchError, SizeError
from .linalg import as_matrix, kron, max_abs, null_space_basis, unitary_deviation
from .model import FieldTag, Packing, make_subspace
from .tolerance import Tolerance, as_tol


class UnitaryList(tuple):
    """n square unitaries of a common size r, validated on construction."""

    def __new__(cls, matrices: Sequence, tol: Tolerance | float | None = None):
        t = as_tol(tol)
        mats = [as_matrix(u) for u in matrices]
        if not mats:
            raise SizeError("need at least one unitary")
        r = mats[0].shape[0]
        for i, u in enumerate(mats):
            if u.shape != (r, r):
                raise SizeError(f"unitary {i} has shape {u.shape}, expected ({r}, {r})")
            dev = unitary_deviation(u)
            if dev > t:
                raise DomainError(f"matrix {i} is not unitary: max |U*U - I| = {dev:.3e}")
            u.setflags(write=False)
        return super().__new__(cls, mats)

    @property
    def size(self) -> int:
        return self[0].shape[0]

    def is_real(self, tol: Tolerance | float | None = None) -> bool:
        t = as_tol(tol)
        return all(max_abs(u.imag) <= t for u in self)


def _tensor_bases(p: Packing, factors: Sequence[np.ndarray], field: FieldTag, tol: float) -> Packing:
    # kron(L_i, U_i) = (e_1 (x) U_i | ... | e_m (x) U_i): blocks in the basis order of L_i
    return Packing(tuple(make_subspace(field, kron(w.basis, u), tol) for w, u in zip(p, factors)))


def tensor_with_unitaries(
    p: Packing, us: UnitaryList | Sequence, tol: Tolerance | float | None = None
) -> Packing:
    """Packing in Gr(F, rk, rm) whose i-th basis is L_i (x) U_i."""
    t = as_tol(tol)
    if not isinstance(us, UnitaryList):
        us = UnitaryList(us, t)
    if len(us) != p.n:
        raise ParameterMismatchError(f"got {len(us)} unitaries for a packing of {p.n} subspaces")
    if p.field is FieldTag.REAL and not us.is_real(t):
        raise FieldError("a real packing can only be tensored with real orthogonal matrices")
    return _tensor_bases(p, us, p.field, t)


def tensor_packings(p: Packing, q: Packing, tol: Tolerance | float | None = None) -> Packing:
    """Packing in Gr(F, k*l, m*r) whose i-th basis is L_i (x) M_i, M_i the i-th basis of q."""
    t = as_tol(tol)
    if p.n != q.n:
        raise ParameterMismatchError(f"packings have different sizes: {p.n} and {q.n}")
    if p.field is not q.field:
        raise ParameterMismatchError(f"packings have different fields: {p.field.value} and {q.field.value}")
    return _tensor_bases(p, q.bases(), p.field, t)


def complement(p: Packing, tol: Tolerance | float | None = None) -> Packing:
    """Orthogonal complements, each an n-th entry of Gr(F, k, k - m)."""
    t = as_tol(tol)
    if p.dim == p.ambient_dim:
        raise DomainError(
            f"cannot complement {p.dim}-dimensional subspaces of F^{p.ambient_dim}: "
            "the complement is zero-dimensional"
        )
    return Packing(
        tuple(make_subspace(p.field, null_space_basis(w.basis.conj().T, t), t) for w in p)
    )
