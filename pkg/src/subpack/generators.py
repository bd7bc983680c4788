"""Seed packings and seeded random inputs.

Randomness comes from numpy's Philox-4x64-10 counter-based bit generator
keyed by the 64-bit seed, with Gaussians from ``Generator.standard_normal``
(numpy's ziggurat transform). Complex Gaussians draw a full real matrix and
then a full imaginary matrix, each scaled by 1/sqrt(2). Equal seeds give
bit-identical output.
"""
from __future__ import annotations

import math

import numpy as np

from .construct import UnitaryList
from .errors import SizeError
from .linalg import orthonormalize
from .model import FieldTag, Packing, make_packing, make_subspace

SEED_MAX = 2**64 - 1


def rng(seed: int) -> np.random.Generator:
    seed = int(seed)
    if not 0 <= seed <= SEED_MAX:
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
    return np.random.Generator(np.random.Philox(key=seed))


def gaussian_matrix(gen: np.random.Generator, field, rows: int, cols: int) -> np.ndarray:
    field = FieldTag.parse(field)
    if field is FieldTag.REAL:
        return gen.standard_normal((rows, cols)).astype(np.complex128)
    re = gen.standard_normal((rows, cols))
    im = gen.standard_normal((rows, cols))
    return (re + 1j * im) / math.sqrt(2.0)


def hadamard_etf() -> Packing:
    """Four equiangular lines in R^3: columns of the 4x4 Sylvester-Hadamard
    matrix with its first (all-ones) row removed, scaled by 1/sqrt(3)."""
    s = 1.0 / math.sqrt(3.0)
    signs = [
        [1, -1, 1, -1],
        [1, 1, -1, -1],
        [1, -1, -1, 1],
    ]
    cols = np.array(signs, dtype=float).T * s
    return make_packing(FieldTag.REAL, [c.reshape(3, 1) for c in cols])


def hadamard_complement_paper_bases() -> Packing:
    """Hard-coded orthonormal bases of the complements of :func:`hadamard_etf`.

    These are one specific choice of basis (signs included) for which
    ``L_3* L_2 L_2* L_3 = [[7/9, 2/(3 sqrt 3)], [2/(3 sqrt 3), 1/3]]``; a
    recomputed complement spans the same planes with different bases.
    """
    a = 1.0 / math.sqrt(2.0)
    b = 1.0 / math.sqrt(6.0)
    bases = [
        [[-2 * b, 0.0], [b, -a], [b, a]],
        [[-2 * b, 0.0], [-b, -a], [b, -a]],
        [[-2 * b, 0.0], [-b, -a], [-b, a]],
        [[-2 * b, 0.0], [b, -a], [-b, -a]],
    ]
    return make_packing(FieldTag.REAL, bases)


def onb_lines(field, k: int) -> Packing:
    """The k coordinate lines of F^k."""
    if k < 1:
        raise SizeError("k must be positive")
    eye = np.eye(k)
    return make_packing(field, [eye[:, [i]] for i in range(k)])


def mub_c2() -> Packing:
    """Six lines of C^2 from the three mutually unbiased bases (Z, X and Y
    eigenbases). Not from the construction literature this package follows:
    it is the smallest packing that saturates the orthoplex bound."""
    h = 1.0 / math.sqrt(2.0)
    vecs = [
        [1, 0],
        [0, 1],
        [h, h],
        [h, -h],
        [h, 1j * h],
        [h, -1j * h],
    ]
    return make_packing(FieldTag.COMPLEX, [np.array(v, dtype=complex).reshape(2, 1) for v in vecs])


def random_unitaries(field, r: int, count: int, seed: int) -> UnitaryList:
    """``count`` unitaries drawn in sequence from one seeded stream."""
    if r < 1 or count < 1:
        raise SizeError("r and count must be positive")
    gen = rng(seed)
    return UnitaryList([orthonormalize(gaussian_matrix(gen, field, r, r)) for _ in range(count)])


def random_unitary(field, r: int, seed: int) -> np.ndarray:
    return random_unitaries(field, r, 1, seed)[0]


def random_packing(field, k: int, m: int, n: int, seed: int) -> Packing:
    if not (1 <= m <= k) or n < 1:
        raise SizeError(f"need 1 <= m <= k and n >= 1, got k={k}, m={m}, n={n}")
    field = FieldTag.parse(field)
    gen = rng(seed)
    return Packing(
        tuple(make_subspace(field, orthonormalize(gaussian_matrix(gen, field, k, m))) for _ in range(n))
    )
