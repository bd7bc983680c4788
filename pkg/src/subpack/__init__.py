"""Construct, transform and certify packings of equidimensional subspaces."""
from .analysis import (
    CertificationReport,
    CrossGramSpectrum,
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
    orthoplex_bound,
    pair_spectrum,
    simplex_bound,
)
from .construct import UnitaryList, complement, tensor_packings, tensor_with_unitaries
from .generators import (
    hadamard_complement_paper_bases,
    hadamard_etf,
    mub_c2,
    onb_lines,
    random_packing,
    random_unitaries,
    random_unitary,
)
from .model import (
    FieldTag,
    Packing,
    Subspace,
    make_packing,
    make_subspace,
    projector,
    read_packing,
    subspaces_equal,
    write_packing,
)
from .tolerance import DEFAULT_TOL, Tolerance

__version__ = "0.1.0"
