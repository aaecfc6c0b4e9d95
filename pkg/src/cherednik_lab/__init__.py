"""Exact computations for the monomial complex reflection groups G(m,p,n):
cyclotomic arithmetic, Dunkl operators, the finite lowest-weight quotient
and its graded characters, and Kleshchev multipartition counts.
"""

from .cyclotomic import CycloNumber, cyclotomic_polynomial, euler_phi, zeta_pow
from .groups import (
    GroupParams,
    MonomialMatrix,
    SizeCapError,
    conjugacy_classes,
    det_char,
    enumerate_group,
    ext_power_char,
    irrep_count,
    reflection_classes,
    reflections,
    s_reflection,
    sigma_reflection,
)
from .multipartitions import (
    KleshchevClassifier,
    Node,
    ResidueSym,
    hecke_simple_count,
    multipartitions,
    non_kleshchev_list,
    orbit_size,
    residue,
    rho_multipartition,
    varpi_apply,
)
from .polynomials import Poly, act, coinvariant_hilbert, fundamental_invariants
from .linalg import GradedSubspace, ideal_dim_in_degree, span_rank
from .dunkl import (
    CherednikParams,
    commutator_check,
    dunkl_apply,
    euler_eigenvalue,
    parameter_embed,
    sample_cherednik_params,
    z_element,
    z_scalar,
)
from .quotient import (
    GenericityError,
    QuotientModule,
    bgg_identity_check,
    build_quotient,
    ce_tensor_char,
    character_limit,
    coinvariant_image_check,
    det_ratio_series,
    find_singular_space,
    onedim_module_check,
    quotient_equiv_char,
    quotient_hilbert,
    singular_space_with_retries,
)

__version__ = "0.1.0"
