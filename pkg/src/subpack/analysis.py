"""Pairwise geometry and certification of packings.

For subspaces with orthonormal bases L_i, L_j the m x m matrix
``G = L_i* L_j`` carries everything: the principal-angle cosines are its
singular values, the eigenvalues of ``G G*`` are their squares, and the
squared chordal distance is ``m - ||G||_F^2``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import numpy as np

from .errors import DomainError, SizeError
from .linalg import hermitian_eigenvalues, max_abs, singular_values
from .model import FieldTag, Packing
from .tolerance import Tolerance, as_tol


class Regime(str, enum.Enum):
    SIMPLEX = "SimplexApplies"
    ORTHOPLEX = "OrthoplexApplies"
    BEYOND = "BeyondOrthoplex"


@dataclass(frozen=True)
class CrossGramSpectrum:
    pair: tuple[int, int]
    eigenvalues: tuple[float, ...]
    cosines: tuple[float, ...]
    chordal_sq: float

    @property
    def angles(self) -> tuple[float, ...]:
        """Principal angles in radians, from the cosines."""
        return tuple(math.acos(min(1.0, max(0.0, c))) for c in self.cosines)


def _check_index(p: Packing, i: int) -> None:
    if not 0 <= i < p.n:
        raise IndexError(f"subspace index {i} out of range for n = {p.n}")


def cross_gram(p: Packing, i: int, j: int) -> np.ndarray:
    """The m x m matrix L_i* L_j."""
    _check_index(p, i)
    _check_index(p, j)
    return p[i].basis.conj().T @ p[j].basis


def cross_gram_product(p: Packing, i: int, j: int) -> np.ndarray:
    """L_i* L_j L_j* L_i."""
    g = cross_gram(p, i, j)
    return g @ g.conj().T


def pair_spectrum(p: Packing, i: int, j: int, tol: Tolerance | float | None = None) -> CrossGramSpectrum:
    if i == j:
        raise DomainError("pair_spectrum needs two distinct indices")
    g = cross_gram(p, i, j)
    eig = hermitian_eigenvalues(g @ g.conj().T, tol)
    cos = singular_values(g)
    return CrossGramSpectrum(
        pair=(i, j),
        eigenvalues=tuple(float(x) for x in eig),
        cosines=tuple(float(x) for x in cos),
        chordal_sq=float(p.dim - np.sum(eig)),
    )


def chordal_distance_sq(p: Packing, i: int, j: int) -> float:
    """m - tr(P_i P_j); exactly 0 for i == j."""
    g = cross_gram(p, i, j)
    if i == j:
        return 0.0
    return float(p.dim - np.sum(np.abs(g) ** 2))


def pairs(p: Packing):
    return combinations(range(p.n), 2)


def fusion_frame_operator(p: Packing) -> np.ndarray:
    return sum(w.basis @ w.basis.conj().T for w in p)


def frame_bound(p: Packing) -> float:
    """nm/k, the only possible bound of a tight packing."""
    return p.n * p.dim / p.ambient_dim


def check_tight(p: Packing, tol: Tolerance | float | None = None) -> float | None:
    a = frame_bound(p)
    s = fusion_frame_operator(p)
    if max_abs(s - a * np.eye(p.ambient_dim)) <= as_tol(tol):
        return a
    return None


def check_equichordal(p: Packing, tol: Tolerance | float | None = None) -> float | None:
    """Common squared chordal distance, or None.

    For n = 1 the condition is vacuous; the value is then NaN.
    """
    if p.n == 1:
        return math.nan
    d = [chordal_distance_sq(p, i, j) for i, j in pairs(p)]
    if max(d) - min(d) <= as_tol(tol):
        return float(np.mean(d))
    return None


def check_strongly_simplicial(
    p: Packing, tol: Tolerance | float | None = None
) -> tuple[float, ...] | None:
    """Shared descending cross-Gram spectrum (entrywise mean), or None.

    Vacuous for n = 1, returning an empty tuple.
    """
    if p.n == 1:
        return ()
    t = as_tol(tol)
    spectra = np.array([pair_spectrum(p, i, j, t).eigenvalues for i, j in pairs(p)])
    if np.all(spectra.max(axis=0) - spectra.min(axis=0) <= t):
        return tuple(float(x) for x in spectra.mean(axis=0))
    return None


def check_equiisoclinic(p: Packing, tol: Tolerance | float | None = None) -> float | None:
    """The common alpha with L_i* L_j L_j* L_i = alpha I for all i != j, or None.

    alpha is estimated as the mean diagonal entry over all pairs, then every
    pair is residual-checked against alpha I. NaN for n = 1.
    """
    if p.n == 1:
        return math.nan
    t = as_tol(tol)
    m = p.dim
    prods = [cross_gram_product(p, i, j) for i, j in pairs(p)]
    alpha = float(np.mean([np.diag(x).real for x in prods]))
    eye = np.eye(m)
    if all(max_abs(x - alpha * eye) <= t for x in prods):
        return max(alpha, 0.0)
    return None


def gerzon_bound(field, k: int) -> int:
    field = FieldTag.parse(field)
    if k < 1:
        raise SizeError("k must be positive")
    return k * k if field is FieldTag.COMPLEX else k * (k + 1) // 2


def simplex_bound(k: int, m: int, n: int) -> float:
    """m(k-m)n / (k(n-1)); undefined for a single subspace."""
    if n < 2:
        raise DomainError("the simplex bound needs n >= 2")
    if not 1 <= m <= k:
        raise SizeError(f"need 1 <= m <= k, got k={k}, m={m}")
    return float(Fraction(m * (k - m) * n, k * (n - 1)))


def orthoplex_bound(k: int, m: int) -> float:
    if not 1 <= m <= k:
        raise SizeError(f"need 1 <= m <= k, got k={k}, m={m}")
    return float(Fraction(m * (k - m), k))


def regime(field, k: int, n: int) -> Regime:
    z = gerzon_bound(field, k)
    if n <= z:
        return Regime.SIMPLEX
    if n <= 2 * (z - 1):
        return Regime.ORTHOPLEX
    return Regime.BEYOND


def min_chordal_sq(p: Packing) -> float:
    """Smallest pairwise squared chordal distance; +inf when n = 1."""
    if p.n == 1:
        return math.inf
    return min(chordal_distance_sq(p, i, j) for i, j in pairs(p))


@dataclass(frozen=True)
class CertificationReport:
    field: FieldTag
    k: int
    m: int
    n: int
    tolerance: float
    tight: bool
    frame_bound: float | None
    equichordal: bool
    chordal_sq: float | None
    strongly_simplicial: bool
    spectrum: tuple[float, ...] | None
    equiisoclinic: bool
    alpha: float | None
    min_chordal_sq: float
    simplex_bound: float | None
    orthoplex_bound: float
    gerzon: int
    regime: Regime
    simplex_saturated: bool
    orthoplex_saturated: bool
    vacuous: bool
    pair_spectra: tuple[CrossGramSpectrum, ...] = field(default=(), repr=False)

    def to_dict(self, fractions: bool = True) -> dict:
        d = {
            "field": self.field.value,
            "ambient_dim": self.k,
            "dim": self.m,
            "n": self.n,
            "tolerance": self.tolerance,
            "tight": self.tight,
            "frame_bound": self.frame_bound,
            "equichordal": self.equichordal,
            "chordal_sq": self.chordal_sq,
            "strongly_simplicial": self.strongly_simplicial,
            "spectrum": list(self.spectrum) if self.spectrum is not None else None,
            "equiisoclinic": self.equiisoclinic,
            "alpha": self.alpha,
            "min_chordal_sq": None if math.isinf(self.min_chordal_sq) else self.min_chordal_sq,
            "simplex_bound": self.simplex_bound,
            "orthoplex_bound": self.orthoplex_bound,
            "gerzon": self.gerzon,
            "regime": self.regime.value,
            "simplex_saturated": self.simplex_saturated,
            "orthoplex_saturated": self.orthoplex_saturated,
            "vacuous": self.vacuous,
        }
        if fractions:
            d["fractions"] = _fractions(d, self.tolerance)
        return d


def snap_fraction(x: float, tol: Tolerance | float | None = None, max_den: int = 10**4) -> str | None:
    """Best small fraction within 10*tol of x, as "p/q", or None."""
    f = Fraction(x).limit_denominator(max_den)
    if abs(float(f) - x) >= 10 * as_tol(tol):
        return None
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _fractions(d: dict, tol: float) -> dict:
    out = {}
    for key in ("frame_bound", "chordal_sq", "alpha", "min_chordal_sq", "simplex_bound", "orthoplex_bound"):
        v = d[key]
        if isinstance(v, float) and math.isfinite(v):
            s = snap_fraction(v, tol)
            if s is not None:
                out[key] = s
    if d["spectrum"]:
        snapped = [snap_fraction(v, tol) for v in d["spectrum"]]
        if all(s is not None for s in snapped):
            out["spectrum"] = snapped
    return out


def certify(p: Packing, tol: Tolerance | float | None = None) -> CertificationReport:
    t = as_tol(tol)
    k, m, n = p.ambient_dim, p.dim, p.n
    vacuous = n == 1
    a = check_tight(p, t)
    ec = check_equichordal(p, t)
    ss = check_strongly_simplicial(p, t)
    ei = check_equiisoclinic(p, t)
    spectra = tuple(pair_spectrum(p, i, j, t) for i, j in pairs(p))

    # Each notion implies the next in exact arithmetic; close the chain so
    # per-check tolerances cannot report e.g. equiisoclinic but not equichordal.
    is_ei = ei is not None
    is_ss = ss is not None or is_ei
    is_ec = ec is not None or is_ss
    if vacuous:
        chordal, spectrum, alpha = None, None, None
    else:
        chordal = ec if ec is not None else (
            float(np.mean([s.chordal_sq for s in spectra])) if is_ec else None
        )
        spectrum = ss if ss is not None else (
            tuple(float(x) for x in np.mean([s.eigenvalues for s in spectra], axis=0)) if is_ss else None
        )
        alpha = ei

    z = gerzon_bound(p.field, k)
    reg = regime(p.field, k, n)
    dmin = min_chordal_sq(p)
    sb = simplex_bound(k, m, n) if n >= 2 else None
    ob = orthoplex_bound(k, m)
    simplex_sat = sb is not None and reg is Regime.SIMPLEX and abs(dmin - sb) <= t
    orthoplex_sat = not vacuous and reg is Regime.ORTHOPLEX and abs(dmin - ob) <= t
    return CertificationReport(
        field=p.field,
        k=k,
        m=m,
        n=n,
        tolerance=t,
        tight=a is not None,
        frame_bound=a,
        equichordal=is_ec,
        chordal_sq=chordal,
        strongly_simplicial=is_ss,
        spectrum=spectrum,
        equiisoclinic=is_ei,
        alpha=alpha,
        min_chordal_sq=dmin,
        simplex_bound=sb,
        orthoplex_bound=ob,
        gerzon=z,
        regime=reg,
        simplex_saturated=simplex_sat,
        orthoplex_saturated=orthoplex_sat,
        vacuous=vacuous,
        pair_spectra=spectra,
    )


def summary(report: CertificationReport) -> str:
    """Short human-readable rendering for ``--verbose`` output."""
    r = report
    lines = [
        f"packing: n={r.n} subspaces of dim {r.m} in {r.field.value}^{r.k}",
        f"tight: {r.tight}" + (f" (A = {r.frame_bound:.12g})" if r.tight else ""),
        f"equichordal: {r.equichordal}   strongly simplicial: {r.strongly_simplicial}   "
        f"equiisoclinic: {r.equiisoclinic}" + (" (vacuous)" if r.vacuous else ""),
        f"min chordal^2: {r.min_chordal_sq:.12g}   simplex: {r.simplex_bound}   "
        f"orthoplex: {r.orthoplex_bound:.12g}",
        f"gerzon: {r.gerzon}   regime: {r.regime.value}",
        f"simplex saturated: {r.simplex_saturated}   orthoplex saturated: {r.orthoplex_saturated}",
    ]
    return "\n".join(lines)
