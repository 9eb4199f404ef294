"""Numerical checks for boundedness of holomorphic derivatives on planar domains."""

from .catalog import (
    BoundaryEssential,
    Constant,
    DirectionalExp,
    FunctionHandle,
    Monomial,
    Pole,
    ScalarMultiple,
    Sine,
    Sum,
    closed_form_sup,
    make,
)
from .errors import HoloboundError
from .favard import (
    ConstantResult,
    VerificationRecord,
    favard_constant,
    lk_constant,
    shifted_lk_constant,
    verify_max_form,
)
from .geometry import (
    Disc,
    DiscExterior,
    Domain,
    Halfline,
    HalflineFamily,
    HalfPlanes,
    Plane,
    RecessionCone,
    boundary_distance,
    classify,
    clip_to_disc,
    contains,
    diameter,
    distance_to_closure,
    first_quadrant,
    halfline_through,
    horizontal_strip,
    real_line_rays,
    recession_cone,
    regular_polygon,
    unit_disc,
    unit_square,
    upper_half_plane,
)
from .numerics import (
    DerivativeResult,
    cauchy_derivative,
    derivative,
    evaluate,
    segment_integral,
)
from .probe import (
    DivergenceWitness,
    ProbeConfig,
    ProbeReport,
    estimate_sup,
    find_divergence_witness,
    probe_halfline,
)
from .spaces import (
    ChainBoundResult,
    GapCheckReport,
    MembershipVerdict,
    OrderSet,
    chain_bound,
    gap_check_bounded,
    gap_check_halflines,
    membership_verdict,
    primitive,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "BoundaryEssential", "Constant", "DirectionalExp", "FunctionHandle",
    "Monomial", "Pole", "ScalarMultiple", "Sine", "Sum", "closed_form_sup",
    "make",
    "HoloboundError",
    "ConstantResult", "VerificationRecord", "favard_constant", "lk_constant",
    "shifted_lk_constant", "verify_max_form",
    "Disc", "DiscExterior", "Domain", "Halfline", "HalflineFamily",
    "HalfPlanes", "Plane", "RecessionCone", "boundary_distance", "classify",
    "clip_to_disc", "contains", "diameter", "distance_to_closure",
    "first_quadrant", "halfline_through", "horizontal_strip", "real_line_rays",
    "recession_cone", "regular_polygon", "unit_disc", "unit_square",
    "upper_half_plane",
    "DerivativeResult", "cauchy_derivative", "derivative", "evaluate",
    "segment_integral",
    "DivergenceWitness", "ProbeConfig", "ProbeReport", "estimate_sup",
    "find_divergence_witness", "probe_halfline",
    "ChainBoundResult", "GapCheckReport", "MembershipVerdict", "OrderSet",
    "chain_bound", "gap_check_bounded", "gap_check_halflines",
    "membership_verdict", "primitive",
]
