"""Exact invariants and certificates for small order-3 tensors over Q."""

from .algebra import (AdhmModule, Algebra111, SymmetryDims, TripleEndo,
                      adhm_module, algebra_hilbert, build_t_phi,
                      compute_111_algebra, cyclicity_check, gorenstein_check,
                      min_generators, symmetry_dims)
from .certify import (LimitCertificate, Verdict, b_family,
                      deformation_quintuple, diagonalizability_certificate,
                      minimal_br_verdict, smoothable_rank_verdict,
                      verify_limit_certificate, wildness)
from .equations import (EndoSpace, Triple111, e_alpha, end_closed_check,
                        implication_audit, koszul_p1, strassen_check,
                        triple_111)
from .linalg import Subspace, frac, kernel, rank, rref, solve_membership
from .normalform import (CorankOneNF, M5Class, NormalFormError, atkinson_nf,
                         check_nf_conditions, classify_m5, m5_dichotomy,
                         nf_tensor, normalize_xm)
from .polymat import flat_limit, generic_rank, t
from .tensor import (FACTORS, GenericityProfile, Tensor3, conciseness,
                     flattening_space, genericity_profile, max_slice_rank,
                     permute, slice_matrix, slices)

__all__ = [
    "AdhmModule", "Algebra111", "CorankOneNF", "EndoSpace", "FACTORS",
    "GenericityProfile", "LimitCertificate", "M5Class", "NormalFormError",
    "Subspace", "Tensor3", "Triple111", "TripleEndo", "SymmetryDims",
    "Verdict", "adhm_module", "algebra_hilbert", "atkinson_nf", "b_family",
    "build_t_phi", "check_nf_conditions", "classify_m5",
    "compute_111_algebra", "conciseness", "cyclicity_check",
    "deformation_quintuple", "diagonalizability_certificate", "e_alpha",
    "end_closed_check", "flat_limit", "flattening_space", "frac",
    "generic_rank", "genericity_profile", "gorenstein_check",
    "implication_audit", "kernel", "koszul_p1", "m5_dichotomy",
    "max_slice_rank", "min_generators", "minimal_br_verdict", "nf_tensor",
    "normalize_xm", "permute", "rank", "rref", "slice_matrix", "slices",
    "smoothable_rank_verdict", "solve_membership", "strassen_check",
    "symmetry_dims", "t", "triple_111", "verify_limit_certificate",
    "wildness",
]
