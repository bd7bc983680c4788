"""Subspaces of F^k, packings of them, and the packing file format."""
from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from . import jsonio
from .errors import (
    FieldError,
    OrthonormalityError,
    ParameterMismatchError,
    ParseError,
    SizeError,
    SubpackError,
)
from .linalg import as_matrix, max_abs
from .tolerance import DEFAULT_TOL, Tolerance, as_tol

__all__ = [
    "FieldTag",
    "Packing",
    "Subspace",
    "Tolerance",
    "DEFAULT_TOL",
    "make_subspace",
    "make_packing",
    "projector",
    "subspaces_equal",
    "packing_to_dict",
    "packing_from_dict",
    "dumps_packing",
    "loads_packing",
    "read_packing",
    "write_packing",
]


class FieldTag(str, enum.Enum):
    REAL = "R"
    COMPLEX = "C"

    @classmethod
    def parse(cls, value) -> "FieldTag":
        if isinstance(value, FieldTag):
            return value
        key = str(value).strip().upper()
        aliases = {"R": cls.REAL, "REAL": cls.REAL, "C": cls.COMPLEX, "COMPLEX": cls.COMPLEX}
        if key not in aliases:
            raise ValueError(f"unknown field {value!r}; expected 'R' or 'C'")
        return aliases[key]


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class Subspace:
    """A point of Gr(F, k, m), held as a k x m matrix with orthonormal columns.

    Build through :func:`make_subspace`, which validates; the constructor
    itself trusts its arguments.
    """

    field: FieldTag
    basis: np.ndarray

    @property
    def ambient_dim(self) -> int:
        return self.basis.shape[0]

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    def __repr__(self):
        return f"Subspace(field={self.field.value}, k={self.ambient_dim}, m={self.dim})"


def make_subspace(field, basis, tol: Tolerance | float | None = None) -> Subspace:
    """Validate ``basis`` and wrap it; non-orthonormal input is rejected, never repaired."""
    field = FieldTag.parse(field)
    t = as_tol(tol)
    b = as_matrix(basis)
    k, m = b.shape
    if not 1 <= m <= k:
        raise SizeError(f"basis must be k x m with 1 <= m <= k, got {k}x{m}")
    if field is FieldTag.REAL:
        imag = max_abs(b.imag)
        if imag > t:
            raise FieldError(f"real subspace has imaginary part of size {imag:.3e}")
        b = b.real.astype(np.complex128)
    dev = max_abs(b.conj().T @ b - np.eye(m))
    if dev > t:
        raise OrthonormalityError(f"basis columns not orthonormal: max |L*L - I| = {dev:.3e}", dev)
    return Subspace(field, _frozen(b))


@dataclass(frozen=True, eq=False)
class Packing:
    """An ordered list of n >= 1 subspaces sharing (field, k, m)."""

    subspaces: tuple[Subspace, ...]

    def __post_init__(self):
        subs = tuple(self.subspaces)
        object.__setattr__(self, "subspaces", subs)
        if not subs:
            raise SizeError("a packing needs at least one subspace")
        f, k, m = subs[0].field, subs[0].ambient_dim, subs[0].dim
        for i, w in enumerate(subs):
            if (w.field, w.ambient_dim, w.dim) != (f, k, m):
                raise ParameterMismatchError(
                    f"subspace {i} lies in Gr({w.field.value},{w.ambient_dim},{w.dim}), "
                    f"expected Gr({f.value},{k},{m})"
                )

    @property
    def field(self) -> FieldTag:
        return self.subspaces[0].field

    @property
    def ambient_dim(self) -> int:
        return self.subspaces[0].ambient_dim

    @property
    def dim(self) -> int:
        return self.subspaces[0].dim

    @property
    def n(self) -> int:
        return len(self.subspaces)

    def __len__(self):
        return len(self.subspaces)

    def __getitem__(self, i) -> Subspace:
        return self.subspaces[i]

    def __iter__(self):
        return iter(self.subspaces)

    def bases(self) -> list[np.ndarray]:
        return [w.basis for w in self.subspaces]

    def __repr__(self):
        return f"Packing(field={self.field.value}, k={self.ambient_dim}, m={self.dim}, n={self.n})"


def make_packing(field, bases: Sequence, tol: Tolerance | float | None = None) -> Packing:
    return Packing(tuple(make_subspace(field, b, tol) for b in bases))


def projector(w: Subspace) -> np.ndarray:
    return w.basis @ w.basis.conj().T


def subspaces_equal(w1: Subspace, w2: Subspace, tol: Tolerance | float | None = None) -> bool:
    if (w1.field, w1.ambient_dim, w1.dim) != (w2.field, w2.ambient_dim, w2.dim):
        raise ParameterMismatchError(f"cannot compare {w1!r} with {w2!r}")
    return max_abs(projector(w1) - projector(w2)) <= as_tol(tol)


# -- file format -------------------------------------------------------------


def packing_to_dict(p: Packing) -> dict:
    return {
        "field": p.field.value,
        "ambient_dim": p.ambient_dim,
        "dim": p.dim,
        "subspaces": [
            {"basis": [[[float(z.real), float(z.imag)] for z in row] for row in w.basis]}
            for w in p.subspaces
        ],
    }


def dumps_packing(p: Packing) -> str:
    return jsonio.dumps(packing_to_dict(p)) + "\n"


def _entry(x, loc: str) -> complex:
    if isinstance(x, bool):
        raise ParseError("expected a number or [re, im]", loc)
    if isinstance(x, (int, float)):
        z = complex(float(x), 0.0)
    elif isinstance(x, list) and len(x) == 2 and all(
        isinstance(v, (int, float)) and not isinstance(v, bool) for v in x
    ):
        z = complex(float(x[0]), float(x[1]))
    else:
        raise ParseError("expected a number or [re, im]", loc)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ParseError("non-finite entry", loc)
    return z


def _positive_int(d: dict, key: str) -> int:
    v = d.get(key)
    if isinstance(v, bool) or not isinstance(v, int) or v < 1:
        raise ParseError(f"{key!r} must be a positive integer", key)
    return v


def packing_from_dict(d, tol: Tolerance | float | None = None) -> Packing:
    """Parse and validate; errors carry a location such as ``subspaces[2].basis[1][0]``."""
    if not isinstance(d, dict):
        raise ParseError("top level must be an object")
    try:
        field = FieldTag.parse(d.get("field"))
    except ValueError as exc:
        raise ParseError(str(exc), "field") from None
    k = _positive_int(d, "ambient_dim")
    m = _positive_int(d, "dim")
    subs = d.get("subspaces")
    if not isinstance(subs, list) or not subs:
        raise ParseError("must be a non-empty list", "subspaces")
    out = []
    for i, s in enumerate(subs):
        loc = f"subspaces[{i}]"
        rows = s.get("basis") if isinstance(s, dict) else None
        if not isinstance(rows, list) or len(rows) != k:
            raise ParseError(f"basis must have {k} rows", f"{loc}.basis")
        mat = np.empty((k, m), dtype=np.complex128)
        for r, row in enumerate(rows):
            if not isinstance(row, list) or len(row) != m:
                raise ParseError(f"row must have {m} entries", f"{loc}.basis[{r}]")
            for c, x in enumerate(row):
                mat[r, c] = _entry(x, f"{loc}.basis[{r}][{c}]")
        try:
            out.append(make_subspace(field, mat, tol))
        except SubpackError as exc:
            raise ParseError(str(exc), loc) from exc
    return Packing(tuple(out))


def loads_packing(text: str, tol: Tolerance | float | None = None) -> Packing:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    return packing_from_dict(d, tol)


def read_packing(path, tol: Tolerance | float | None = None) -> Packing:
    return loads_packing(Path(path).read_text(), tol)


def write_packing(p: Packing, path) -> None:
    Path(path).write_text(dumps_packing(p))
