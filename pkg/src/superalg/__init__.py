"""superalg: exact symbolic engine for super-commutative algebra.

Koszul-sign normal forms over exact rationals, Grassmann algebras and
GL(m|n) points, super Hopf presentations with axiom checkers, exterior
duality, bosonization, integrals, truncated hyperalgebras, and
Harish-Chandra pairs with PBW envelopes.
"""

from .core import (
    EVEN,
    ODD,
    GeneratorSet,
    GeneratorSetMismatch,
    ParityViolation,
    Scalar,
    SuperMonomial,
    SuperPoly,
    UnknownGenerator,
    evaluate_hom,
    normalize_product,
    parity_preserving,
)
from .tensor import TensorPoly, tensor_mul
from .parsing import ParseError, format_poly, parse_generator_set, parse_poly
from .grassmann import (
    GrassmannAlgebra,
    NotAPoint,
    NotInvertible,
    PointSampler,
    SuperMatrix,
    invert_element,
)
from .hopf import (
    AxiomReport,
    HopfPresentation,
    OddCotangent,
    PresentationError,
    additive_presentation,
    check_hopf_axioms,
    compute_W,
    even_quotient,
    exterior_hopf,
    glmn_presentation,
)
from .finite import (
    FiniteDimHopf,
    IntegralSpace,
    bosonize,
    check_finite_hopf_axioms,
    dual_hopf,
    dual_iso_check,
    exterior_finite,
    exterior_pairing,
    finite_from_presentation,
    integral_space,
    pairing_on_sequences,
)
from .hyper import (
    TruncatedDual,
    check_lie_even,
    pbw_dim_check,
    primitives,
    super_pbw_count,
    truncated_dual,
)
from .liealg import StructureError, SuperLieAlgebraData
from .hcpair import (
    HCPair,
    SymplecticData,
    TruncatedEnvelope,
    abelian_pair,
    build_super_lie,
    envelope_pbw_count,
    sp_basis,
    spo_pair,
    truncated_envelope,
    validate_hcpair,
)
from .decomposition import decomposition_check
from .presfile import load_presentation, parse_presentation, print_presentation
from .report import Report

__version__ = "0.1.0"
