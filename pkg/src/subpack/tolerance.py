from __future__ import annotations

from dataclasses import dataclass

DEFAULT_ABSOLUTE = 1e-9


@dataclass(frozen=True)
class Tolerance:
    """Absolute comparison threshold for entries of unit-scale matrices."""

    absolute: float = DEFAULT_ABSOLUTE

    def __post_init__(self):
        if not (0.0 < self.absolute < 1e-2):
            raise ValueError(f"tolerance must lie in (0, 1e-2), got {self.absolute!r}")

    def __float__(self):
        return self.absolute


DEFAULT_TOL = Tolerance()


def as_tol(tol: Tolerance | float | None) -> float:
    """Accept a Tolerance, a bare float, or None (default) and return the float."""
    if tol is None:
        return DEFAULT_TOL.absolute
    if isinstance(tol, Tolerance):
        return tol.absolute
    return Tolerance(float(tol)).absolute
