"""Exact-arithmetic toolkit for finite-dimensional semisimple Hopf algebras
over GF(p^k): integrals, the square-of-the-antipode element u, Wedderburn
decomposition, higher indicators, and gauge invariance under twists."""

__version__ = "0.1.0"

from .ff import Field, FieldError, field_new
from .hopf import (
    AlgElement,
    AlgebraMismatch,
    HopfAlgebra,
    HopfError,
    ModuleRep,
    NotAModule,
    TensorElement,
    regular_module,
    solve_antipode,
    trivial_module,
)
from .groups import GroupTable, BUNDLED_GROUPS
from .builders import (
    CharacteristicDividesOrder,
    PreconditionPSquare,
    drinfeld_double,
    dual_bicharacter_twist,
    dual_group_algebra,
    group_algebra,
    subgroup_bicharacter_twist,
)
from .integrals import (
    IntegralData,
    NotSemisimple,
    cocommutativity_equivalence,
    compute_integral,
    compute_dual_integral,
    integral_data,
    verify_frobenius_identities,
)
from .wedderburn import (
    FieldTooSmall,
    WedderburnData,
    center,
    central_primitive_idempotents,
    verify_wedderburn_identities,
    wedderburn_data,
    wedderburn_with_extension,
)
from .indicators import (
    BudgetExceeded,
    IndicatorTable,
    indicator,
    indicator_simple,
    indicator_table,
    nu_zero,
    operator_indicator,
    power_centrality_check,
    regular_indicator_trace,
    sweedler_power,
    sweedler_power_matrix,
    tensor_power_rep,
)
from .twist import (
    Twist,
    gauge_invariance_check,
    twist_hopf,
    twist_validate,
    twisted_u_check,
)
from .hopfio import (
    ParseError,
    corpus_path,
    ValidationError,
    algebra_digest,
    load_hopf,
    load_module,
    load_twist,
    parse_hopf,
    parse_module,
    parse_twist,
    serialize_hopf,
    serialize_module,
    serialize_twist,
)
from .report import CheckEntry, CheckReport

__all__ = [
    "AlgElement",
    "AlgebraMismatch",
    "BUNDLED_GROUPS",
    "BudgetExceeded",
    "CharacteristicDividesOrder",
    "CheckEntry",
    "CheckReport",
    "Field",
    "FieldError",
    "FieldTooSmall",
    "GroupTable",
    "HopfAlgebra",
    "HopfError",
    "IndicatorTable",
    "IntegralData",
    "ModuleRep",
    "NotAModule",
    "NotSemisimple",
    "ParseError",
    "PreconditionPSquare",
    "TensorElement",
    "Twist",
    "ValidationError",
    "WedderburnData",
    "algebra_digest",
    "center",
    "central_primitive_idempotents",
    "cocommutativity_equivalence",
    "compute_dual_integral",
    "compute_integral",
    "corpus_path",
    "drinfeld_double",
    "dual_bicharacter_twist",
    "dual_group_algebra",
    "field_new",
    "gauge_invariance_check",
    "group_algebra",
    "indicator",
    "indicator_simple",
    "indicator_table",
    "integral_data",
    "load_hopf",
    "load_module",
    "load_twist",
    "nu_zero",
    "operator_indicator",
    "parse_hopf",
    "parse_module",
    "parse_twist",
    "power_centrality_check",
    "regular_indicator_trace",
    "regular_module",
    "serialize_hopf",
    "serialize_module",
    "serialize_twist",
    "solve_antipode",
    "subgroup_bicharacter_twist",
    "sweedler_power",
    "sweedler_power_matrix",
    "tensor_power_rep",
    "trivial_module",
    "twist_hopf",
    "twist_validate",
    "twisted_u_check",
    "verify_frobenius_identities",
    "verify_wedderburn_identities",
    "wedderburn_data",
    "wedderburn_with_extension",
]
