"""Combinatorial models of broken fibrations on smooth 4-manifolds.

Exact-arithmetic tooling: monodromy on first homology, round-handle
parity, surgery operations, Euler characteristic / signature / pi1
bookkeeping, a declarative .blf text format, an HTTP service, and a CLI.
"""

from .blffile import load_document, parse_document, save_document, serialize_document
from .errors import (
    BlfError,
    DimensionError,
    FibrationError,
    InapplicableError,
    ParseError,
    UnsupportedError,
    WordError,
)
from .exact import IntMatrix, is_symplectic, pairing, smith_normal_form
from .fibration import (
    Base,
    BrokenFibration,
    Declared,
    HandlePairDescriptor,
    LefschetzPiece,
    RoundCobordism,
    SurfaceModel,
    Violation,
    global_monodromy,
    resolve_parity,
    round_handle_decomposition,
    simplified_blf,
    validate,
)
from .invariants import (
    GroupPresentation,
    InvariantRecord,
    almost_complex_parity,
    broken_sum_invariants,
    build_record,
    euler_characteristic,
    homeo_report,
    homology_from_presentation,
    pi1_presentation,
    tietze_simplify,
)
from .models import (
    achiral_negative,
    double_rational_csum,
    matsumoto_fibration,
    matsumoto_sum,
    rational_ruled,
    s1xs3_fibration,
    s4_fibration,
    sphere_times_surface,
)
from .surface import (
    CurveWord,
    MappingClassRep,
    Parity,
    classify_round_parity,
    compose_monodromy,
    dehn_twist_action,
)
from .surgery import (
    BrokenFiberSumSpec,
    blow_down,
    blow_up,
    broken_fiber_sum,
    connected_sum_model,
    example42_family,
    push_to_higher_side,
    step_fibration,
    trade_negative_node,
)
from .sw import (
    ChamberData,
    PipelineReport,
    SectionVerdict,
    SWClassRecord,
    adjunction_check,
    section_constraint,
    simple_type_check,
    sphere_torus_vanishing,
    sw_symmetry,
    wall_crossing,
)

__version__ = "0.1.0"

__all__ = [
    "BlfError",
    "DimensionError",
    "WordError",
    "FibrationError",
    "UnsupportedError",
    "InapplicableError",
    "ParseError",
    "IntMatrix",
    "pairing",
    "is_symplectic",
    "smith_normal_form",
    "CurveWord",
    "Parity",
    "MappingClassRep",
    "compose_monodromy",
    "dehn_twist_action",
    "classify_round_parity",
    "Base",
    "SurfaceModel",
    "LefschetzPiece",
    "RoundCobordism",
    "Declared",
    "BrokenFibration",
    "Violation",
    "simplified_blf",
    "global_monodromy",
    "validate",
    "resolve_parity",
    "HandlePairDescriptor",
    "round_handle_decomposition",
    "euler_characteristic",
    "broken_sum_invariants",
    "almost_complex_parity",
    "GroupPresentation",
    "pi1_presentation",
    "tietze_simplify",
    "homology_from_presentation",
    "InvariantRecord",
    "build_record",
    "homeo_report",
    "BrokenFiberSumSpec",
    "broken_fiber_sum",
    "connected_sum_model",
    "push_to_higher_side",
    "trade_negative_node",
    "blow_down",
    "blow_up",
    "step_fibration",
    "example42_family",
    "matsumoto_fibration",
    "matsumoto_sum",
    "rational_ruled",
    "sphere_times_surface",
    "s4_fibration",
    "s1xs3_fibration",
    "achiral_negative",
    "double_rational_csum",
    "ChamberData",
    "SWClassRecord",
    "SectionVerdict",
    "PipelineReport",
    "wall_crossing",
    "adjunction_check",
    "simple_type_check",
    "sw_symmetry",
    "section_constraint",
    "sphere_torus_vanishing",
    "parse_document",
    "serialize_document",
    "load_document",
    "save_document",
    "__version__",
]
