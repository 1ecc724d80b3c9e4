"""Exact representation data of the Z3-orbifold affine sl2 VOA at level k.

The package materializes, in exact arithmetic, the full module catalog of
the orbifold algebra: labels, conformal weights, quantum dimensions, fusion
products and contragredients — together with verification suites that check
every identity the data is supposed to satisfy.
"""

from .labels import (
    FusionVector,
    IrrLabel,
    LabelSyntaxError,
    Rational,
    Sector,
    enumerate_irreducibles,
    make_label,
    parse_label,
    residue3,
    vacuum,
)
from .weights import WeightedLabel, base_twist_weight, conformal_weight, generator_desc, weighted_label
from .chebyshev import ChebPoly, cheb_u, cyclotomic, min_poly_two_cos
from .qdim import (
    QDimElement,
    global_dimension,
    has_unit_qdim,
    qdim_exact,
    qdim_index,
    qdim_numeric,
    reduction_modulus,
)
from .fusion import (
    contragredient,
    fuse,
    fuse_irreducible,
    fusion_coefficient,
    sign_value,
    sl2_fusion_range,
)
from .verify import (
    Failure,
    VerificationReport,
    run_suites,
    verify_associativity,
    verify_catalog,
    verify_commutativity,
    verify_duality,
    verify_k1_lattice_oracle,
    verify_qdim_homomorphism,
    verify_unit,
)

__version__ = "0.1.0"

__all__ = [
    "FusionVector",
    "IrrLabel",
    "LabelSyntaxError",
    "Rational",
    "Sector",
    "enumerate_irreducibles",
    "make_label",
    "parse_label",
    "residue3",
    "vacuum",
    "WeightedLabel",
    "base_twist_weight",
    "conformal_weight",
    "generator_desc",
    "weighted_label",
    "ChebPoly",
    "cheb_u",
    "cyclotomic",
    "min_poly_two_cos",
    "QDimElement",
    "global_dimension",
    "has_unit_qdim",
    "qdim_exact",
    "qdim_index",
    "qdim_numeric",
    "reduction_modulus",
    "contragredient",
    "fuse",
    "fuse_irreducible",
    "fusion_coefficient",
    "sign_value",
    "sl2_fusion_range",
    "Failure",
    "VerificationReport",
    "run_suites",
    "verify_associativity",
    "verify_catalog",
    "verify_commutativity",
    "verify_duality",
    "verify_k1_lattice_oracle",
    "verify_qdim_homomorphism",
    "verify_unit",
    "__version__",
]
