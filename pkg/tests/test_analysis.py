import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import witnesses
from subpack import (
    Regime,
    certify,
    check_equichordal,
    check_equiisoclinic,
    check_strongly_simplicial,
    check_tight,
    chordal_distance_sq,
    cross_gram,
    fusion_frame_operator,
    gerzon_bound,
    hadamard_complement_paper_bases,
    hadamard_etf,
    make_packing,
    mub_c2,
    onb_lines,
    orthoplex_bound,
    pair_spectrum,
    random_packing,
    simplex_bound,
)
from subpack.analysis import snap_fraction
from subpack.errors import DomainError

SQ3 = math.sqrt(3)
TOL = 1e-9

MUB_VECTORS = [
    (1, 0),
    (0, 1),
    (1 / math.sqrt(2), 1 / math.sqrt(2)),
    (1 / math.sqrt(2), -1 / math.sqrt(2)),
    (1 / math.sqrt(2), 1j / math.sqrt(2)),
    (1 / math.sqrt(2), -1j / math.sqrt(2)),
]


def mub_oracle():
    """All 15 squared chordal distances 1 - |<x, y>|^2 from the raw vectors."""
    vs = [np.array(v, dtype=complex) for v in MUB_VECTORS]
    return {(i, j): 1 - abs(np.vdot(vs[i], vs[j])) ** 2 for i in range(6) for j in range(i + 1, 6)}


# -- pairwise geometry --------------------------------------------------------------


def test_cross_gram_examples():
    p = random_packing("C", 4, 2, 2, seed=0)
    assert np.abs(cross_gram(p, 0, 0) - np.eye(2)).max() <= TOL
    e = np.eye(4)
    orth = make_packing("R", [e[:, :2], e[:, 2:]])
    assert np.array_equal(cross_gram(orth, 0, 1), np.zeros((2, 2)))
    # <w_2, w_1> = (-1 + 1 - 1)/3
    assert np.allclose(cross_gram(hadamard_etf(), 0, 1), [[-1 / 3]], atol=1e-15)
    with pytest.raises(IndexError):
        cross_gram(p, 0, 2)


def test_pair_spectrum_examples():
    w = random_packing("R", 4, 2, 1, seed=2)[0]
    twice = make_packing("R", [w.basis, w.basis])
    s = pair_spectrum(twice, 0, 1)
    assert np.allclose(s.eigenvalues, [1, 1]) and abs(s.chordal_sq) < 1e-14

    s = pair_spectrum(hadamard_complement_paper_bases(), 2, 1)
    assert np.allclose(s.eigenvalues, [1, 1 / 9], atol=1e-14)
    assert s.chordal_sq == pytest.approx(8 / 9, abs=1e-14)
    assert np.allclose(s.cosines, [1, 1 / 3], atol=1e-14)

    h = hadamard_etf()
    for i in range(4):
        for j in range(4):
            if i != j:
                s = pair_spectrum(h, i, j)
                assert s.eigenvalues == pytest.approx((1 / 9,), abs=1e-15)
                assert s.chordal_sq == pytest.approx(8 / 9, abs=1e-15)
    with pytest.raises(DomainError):
        pair_spectrum(h, 1, 1)


def test_principal_angles_from_cosines():
    s = pair_spectrum(hadamard_complement_paper_bases(), 2, 1)
    assert s.angles == pytest.approx((0.0, math.acos(1 / 3)), abs=1e-7)


def test_chordal_distance_examples():
    h = hadamard_etf()
    assert chordal_distance_sq(h, 2, 2) == 0.0
    e = np.eye(4)
    assert chordal_distance_sq(make_packing("R", [e[:, :2], e[:, 2:]]), 0, 1) == 2.0
    assert chordal_distance_sq(h, 0, 3) == pytest.approx(8 / 9, abs=1e-15)


def test_fusion_frame_operator_examples():
    assert np.allclose(fusion_frame_operator(make_packing("C", [np.eye(3)])), np.eye(3))
    assert np.allclose(fusion_frame_operator(onb_lines("R", 4)), np.eye(4))
    assert np.abs(fusion_frame_operator(hadamard_etf()) - 4 / 3 * np.eye(3)).max() < 1e-15


# -- taxonomy checks -------------------------------------------------------------------


def test_check_tight():
    assert check_tight(onb_lines("R", 5)) == 1.0
    assert check_tight(hadamard_etf()) == pytest.approx(4 / 3)
    assert check_tight(hadamard_complement_paper_bases()) == pytest.approx(8 / 3)
    assert check_tight(witnesses.unequal_lines()) is None


def test_check_equichordal():
    assert check_equichordal(hadamard_etf()) == pytest.approx(8 / 9, abs=1e-14)
    assert check_equichordal(hadamard_complement_paper_bases()) == pytest.approx(8 / 9, abs=1e-14)
    assert check_equichordal(witnesses.unequal_lines()) is None


def test_check_strongly_simplicial():
    assert check_strongly_simplicial(hadamard_complement_paper_bases()) == pytest.approx((1, 1 / 9), abs=1e-14)
    alpha = check_equiisoclinic(witnesses.isoclinic_planes())
    assert check_strongly_simplicial(witnesses.isoclinic_planes()) == pytest.approx((alpha, alpha), abs=1e-14)
    for seed in range(5):
        assert check_strongly_simplicial(random_packing("C", 5, 2, 2, seed)) is not None
    assert check_strongly_simplicial(witnesses.equichordal_not_simplicial()) is None


def test_check_equiisoclinic():
    assert check_equiisoclinic(hadamard_etf()) == pytest.approx(1 / 9, abs=1e-15)
    assert check_equiisoclinic(hadamard_complement_paper_bases()) is None
    e = np.eye(6)
    assert check_equiisoclinic(make_packing("R", [e[:, :2], e[:, 2:4], e[:, 4:]])) == 0.0
    assert check_equiisoclinic(witnesses.isoclinic_planes()) == pytest.approx(0.25, abs=1e-14)


def test_vacuous_single_subspace():
    p = make_packing("R", [np.eye(3)[:, :2]])
    assert math.isnan(check_equichordal(p))
    assert check_strongly_simplicial(p) == ()
    assert math.isnan(check_equiisoclinic(p))
    r = certify(p)
    assert r.vacuous and r.equichordal and r.strongly_simplicial and r.equiisoclinic
    assert r.min_chordal_sq == math.inf
    d = r.to_dict()
    assert d["min_chordal_sq"] is None and d["simplex_bound"] is None
    assert not r.simplex_saturated and not r.orthoplex_saturated


# -- bounds --------------------------------------------------------------------------


@pytest.mark.parametrize("field, k, z", [("R", 3, 6), ("C", 2, 4), ("R", 1, 1), ("C", 3, 9)])
def test_gerzon(field, k, z):
    assert gerzon_bound(field, k) == z


def test_simplex_bound():
    assert simplex_bound(3, 1, 4) == pytest.approx(8 / 9, abs=0)
    assert simplex_bound(5, 5, 7) == 0
    assert simplex_bound(4, 2, 3) == 1.5
    with pytest.raises(DomainError):
        simplex_bound(3, 1, 1)


def test_orthoplex_bound():
    assert orthoplex_bound(2, 1) == 0.5
    assert orthoplex_bound(4, 4) == 0
    assert orthoplex_bound(3, 1) == pytest.approx(2 / 3, abs=0)


# -- certify ---------------------------------------------------------------------------


def test_certify_hadamard():
    r = certify(hadamard_etf())
    assert r.tight and r.frame_bound == pytest.approx(4 / 3, abs=TOL)
    assert r.equiisoclinic and r.alpha == pytest.approx(1 / 9, abs=TOL)
    assert r.regime is Regime.SIMPLEX and r.simplex_saturated
    assert r.min_chordal_sq == pytest.approx(simplex_bound(3, 1, 4), abs=TOL)


def test_certify_paper_complement():
    r = certify(hadamard_complement_paper_bases())
    assert r.tight and r.frame_bound == pytest.approx(8 / 3, abs=TOL)
    assert r.strongly_simplicial and r.spectrum == pytest.approx((1, 1 / 9), abs=TOL)
    assert not r.equiisoclinic and r.alpha is None


def test_certify_mub_against_exhaustive_oracle():
    oracle = mub_oracle()
    p = mub_c2()
    for (i, j), d in oracle.items():
        assert chordal_distance_sq(p, i, j) == pytest.approx(d, abs=1e-15)
    r = certify(p)
    assert r.regime is Regime.ORTHOPLEX
    assert r.min_chordal_sq == pytest.approx(min(oracle.values()), abs=TOL) == 0.5
    assert r.orthoplex_saturated and not r.simplex_saturated
    # some pairs orthogonal (distance 1), cross-basis pairs 1/2
    assert sorted(set(round(d, 12) for d in oracle.values())) == [0.5, 1.0]
    assert not r.equichordal


def test_certify_onb_lines():
    r = certify(onb_lines("R", 3))
    assert r.frame_bound == 1 and r.chordal_sq == 1 and r.regime is Regime.SIMPLEX


def test_regime_boundaries():
    def reg(field, k, n):
        return certify(random_packing(field, k, 1, n, seed=n)).regime

    assert reg("C", 2, 4) is Regime.SIMPLEX
    assert reg("C", 2, 5) is Regime.ORTHOPLEX
    assert reg("C", 2, 6) is Regime.ORTHOPLEX
    assert reg("C", 2, 7) is Regime.BEYOND


def test_beyond_orthoplex_claims_nothing():
    r = certify(random_packing("R", 2, 1, 5, seed=1))
    assert r.regime is Regime.BEYOND
    assert not r.simplex_saturated and not r.orthoplex_saturated


def test_report_fractions():
    d = certify(hadamard_etf()).to_dict()
    assert d["fractions"]["frame_bound"] == "4/3"
    assert d["fractions"]["alpha"] == "1/9"
    assert d["fractions"]["min_chordal_sq"] == "8/9"
    assert d["frame_bound"] == pytest.approx(4 / 3)  # float kept alongside
    assert snap_fraction(math.pi, 1e-9) is None
    assert snap_fraction(0.5000000000001, 1e-9) == "1/2"


# -- properties --------------------------------------------------------------------------


CORPUS = [
    hadamard_etf,
    hadamard_complement_paper_bases,
    mub_c2,
    lambda: onb_lines("C", 3),
    witnesses.equichordal_not_simplicial,
    witnesses.isoclinic_planes,
    witnesses.unequal_lines,
    witnesses.tight_not_equichordal,
    witnesses.mercedes_c2,
]


@pytest.mark.parametrize("make", CORPUS)
def test_basis_invariance_on_corpus(make):
    p = make()
    base = certify(p)
    for seed in range(3):
        other = certify(witnesses.rebase(p, seed))
        assert_same_report(base, other, 2 * TOL)


def assert_same_report(a, b, tol):
    for key in ("tight", "equichordal", "strongly_simplicial", "equiisoclinic", "regime",
                "simplex_saturated", "orthoplex_saturated", "vacuous"):
        assert getattr(a, key) == getattr(b, key), key
    for key in ("frame_bound", "chordal_sq", "alpha", "min_chordal_sq"):
        x, y = getattr(a, key), getattr(b, key)
        assert (x is None) == (y is None), key
        if x is not None:
            assert abs(x - y) <= tol, key
    if a.spectrum is not None:
        assert np.abs(np.subtract(a.spectrum, b.spectrum)).max() <= tol
    for s, t in zip(a.pair_spectra, b.pair_spectra):
        assert np.abs(np.subtract(s.eigenvalues, t.eigenvalues)).max() <= tol


@settings(max_examples=30, deadline=None)
@given(
    st.sampled_from(["R", "C"]),
    st.integers(1, 5),
    st.integers(1, 3),
    st.integers(2, 5),
    st.integers(0, 2**32),
)
def test_spectrum_invariants(field, k, m, n, seed):
    m = min(m, k)
    p = random_packing(field, k, m, n, seed)
    for i in range(n):
        for j in range(i + 1, n):
            s = pair_spectrum(p, i, j)
            t = pair_spectrum(p, j, i)
            assert np.abs(np.subtract(s.eigenvalues, t.eigenvalues)).max() <= TOL
            ev = np.array(s.eigenvalues)
            cos = np.array(s.cosines)
            assert np.all(ev >= -TOL) and np.all(ev <= 1 + TOL)
            assert np.all(cos >= -TOL) and np.all(cos <= 1 + TOL)
            assert np.abs(cos**2 - ev).max() <= TOL
            assert -TOL <= s.chordal_sq <= m + TOL
            assert abs(chordal_distance_sq(p, i, j) - (m - ev.sum())) <= TOL
    r = certify(p)
    assert not r.equiisoclinic or r.strongly_simplicial
    assert not r.strongly_simplicial or r.equichordal
    if r.tight:
        assert abs(r.frame_bound - n * m / k) <= TOL
