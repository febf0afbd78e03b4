"""Exact tangent cones, standard bases, Hilbert series and connectedness."""

from .basis import (
    IdealBasis,
    buchberger,
    eliminate,
    ideal,
    ideal_colon,
    ideal_equal,
    ideal_intersect,
    ideal_product,
    ideal_sum,
    local_contains,
    local_equal,
    mora_normal_form,
    normal_form,
    radical_membership,
    saturate,
    standard_basis,
)
from .deform import (
    check_hom_identities,
    dehomogenize,
    homogenize_poly,
    homogenized_ideal,
    t_decompose,
    tangent_cone,
)
from .errors import (
    CannotCertify,
    CertificateFailure,
    NotGroebnerError,
    ParseError,
    PreconditionError,
    RingMismatchError,
    UnknownVariableError,
)
from .hilbert import (
    HilbertData,
    artinian_length,
    embedding_codim,
    hilbert_coefficients,
    hilbert_polynomial,
    hilbert_samuel,
    hilbert_series,
    hilbert_series_monomial,
)
from .ring import (
    DEGREVLEX,
    GF,
    LEX,
    NEGDEGREVLEX,
    QQ,
    Field,
    MonomialOrder,
    Polynomial,
    Ring,
    compare,
    differentiate,
    initial_form,
    order_of,
    parse_polynomial,
    polynomial_ring,
)
from .spectrum import (
    GammaGraph,
    PrimeCertificate,
    a_sdim,
    ass_primes_monomial,
    connected_in_codim,
    dimension,
    gamma_graph,
    min_primes_general,
    min_primes_monomial,
    radical_equals_candidate,
    sdim,
    slice_check,
)

__version__ = "0.1.0"

__all__ = [
    "CannotCertify",
    "CertificateFailure",
    "DEGREVLEX",
    "Field",
    "GF",
    "GammaGraph",
    "HilbertData",
    "IdealBasis",
    "LEX",
    "MonomialOrder",
    "NEGDEGREVLEX",
    "NotGroebnerError",
    "ParseError",
    "Polynomial",
    "PreconditionError",
    "PrimeCertificate",
    "QQ",
    "Ring",
    "RingMismatchError",
    "UnknownVariableError",
    "a_sdim",
    "artinian_length",
    "ass_primes_monomial",
    "buchberger",
    "check_hom_identities",
    "compare",
    "connected_in_codim",
    "dehomogenize",
    "differentiate",
    "dimension",
    "eliminate",
    "embedding_codim",
    "gamma_graph",
    "hilbert_coefficients",
    "hilbert_polynomial",
    "hilbert_samuel",
    "hilbert_series",
    "hilbert_series_monomial",
    "homogenize_poly",
    "homogenized_ideal",
    "ideal",
    "ideal_colon",
    "ideal_equal",
    "ideal_intersect",
    "ideal_product",
    "ideal_sum",
    "initial_form",
    "local_contains",
    "local_equal",
    "min_primes_general",
    "min_primes_monomial",
    "mora_normal_form",
    "normal_form",
    "order_of",
    "parse_polynomial",
    "polynomial_ring",
    "radical_equals_candidate",
    "radical_membership",
    "saturate",
    "sdim",
    "slice_check",
    "standard_basis",
    "t_decompose",
    "tangent_cone",
]
