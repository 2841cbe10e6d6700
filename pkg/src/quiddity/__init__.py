"""Quiddity cycles and the affine rank-two classification.

Exact combinatorics of triangulation quiddity cycles (dihedral canonical
forms, enumeration, containment covers and their refinement step),
reflection walks on exact scalar triples with their characteristic
sequences, and the classification of affine triples by quiddity-cycle
gluing.
"""

from .affine import (
    FIFTEEN_PATTERNS,
    AffineDecomposition,
    ClassificationReport,
    ClassifiedOrbit,
    GenericRowsReport,
    KNOWN_ROWS,
    check_generic_rows,
    classify_mu,
    cor15_check,
    decompose_affine,
    verify_cor15_on_classified,
)
from .charseq import (
    CharSeqReport,
    SolveReport,
    Triple,
    minimal_period,
    sigma1,
    sigma2,
    solve_triples,
    walk,
)
from .cycles import (
    DEFAULT_MAX_LENGTH,
    DihedralCycle,
    EtaMatrix,
    MINUS_IDENTITY,
    Pattern,
    canonicalize,
    contains_cyclic,
    contains_linear,
    ear_insert,
    enumerate_cycles,
    eta,
    eta_product,
    is_quiddity,
    xi,
)
from .localdesc import (
    BUILTIN_PAIRS,
    CoverPair,
    CoverReport,
    EXCEPTIONAL_REPRESENTATIVES,
    NINE_PATTERNS,
    QUADRUPLE_PATTERNS,
    SubseqReport,
    TWELVE_PATTERNS,
    delta,
    delta_preimages,
    iota,
    psi,
    psi_bar,
    psi_bar_inv,
    rho,
    rho_preimages,
    theorem_step,
    verify_cover,
    verify_thm_subseqs,
)
from .scalars import MValue, Scalar, m_value, parse_scalar

__version__ = "0.1.0"

__all__ = [
    "AffineDecomposition",
    "BUILTIN_PAIRS",
    "CharSeqReport",
    "ClassificationReport",
    "ClassifiedOrbit",
    "CoverPair",
    "CoverReport",
    "DEFAULT_MAX_LENGTH",
    "DihedralCycle",
    "EXCEPTIONAL_REPRESENTATIVES",
    "EtaMatrix",
    "FIFTEEN_PATTERNS",
    "GenericRowsReport",
    "KNOWN_ROWS",
    "MINUS_IDENTITY",
    "MValue",
    "NINE_PATTERNS",
    "Pattern",
    "QUADRUPLE_PATTERNS",
    "Scalar",
    "SolveReport",
    "SubseqReport",
    "TWELVE_PATTERNS",
    "Triple",
    "canonicalize",
    "check_generic_rows",
    "classify_mu",
    "contains_cyclic",
    "contains_linear",
    "cor15_check",
    "decompose_affine",
    "delta",
    "delta_preimages",
    "ear_insert",
    "enumerate_cycles",
    "eta",
    "eta_product",
    "iota",
    "is_quiddity",
    "m_value",
    "minimal_period",
    "parse_scalar",
    "psi",
    "psi_bar",
    "psi_bar_inv",
    "rho",
    "rho_preimages",
    "sigma1",
    "sigma2",
    "solve_triples",
    "theorem_step",
    "verify_cor15_on_classified",
    "verify_cover",
    "verify_thm_subseqs",
    "walk",
    "xi",
]
