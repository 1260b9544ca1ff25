"""Exact enumeration of pin-sequence permutation classes.

Pin words place points around an origin; the point-placement map turns each
word into a centred permutation.  This package converts pin specs (eventually
periodic pin words) into exact rational generating functions and certified
growth rates, re-derives the collision/decomposability classification by
exhaustive search, and cross-validates everything against brute-force
enumeration oracles.
"""

from .cperm import (
    EMPTY,
    QUADRANT_POINT,
    CentredPerm,
    adjacency_condition,
    box_decompose,
    box_sum,
    contains,
    from_oneline,
    is_box_indecomposable,
    minimal_centred_intervals,
    normal_form,
    one_quadrant,
    strip_origin,
    subpatterns,
)
from .errors import (
    NumericError,
    ParseError,
    PinclassesError,
    PreconditionError,
    VerificationError,
)
from .pimap import (
    PinDiagram,
    compose_representation,
    diagram_points,
    pi_map,
    point_quadrant,
    remove_interior_point,
)
from .pinword import (
    PinSpec,
    PinWord,
    enumerate_pin_factors,
    is_recurrent,
    left_truncate,
    parse_pin_spec,
    parse_pin_word,
    pin_factor,
)
from .pipeline import (
    GrowthResult,
    GSequence,
    amended_G,
    class_gf,
    closure_gf,
    complete_class_gf,
    finite_closure_gf,
    growth_rate,
    indecomposable_counts,
    interior_gf,
    truncation_convergence,
)
from .series import Poly, RatGF, coeffs, from_eventually_constant, seq

__version__ = "0.1.0"

__all__ = [
    "EMPTY",
    "QUADRANT_POINT",
    "CentredPerm",
    "GrowthResult",
    "GSequence",
    "NumericError",
    "ParseError",
    "PinclassesError",
    "PinDiagram",
    "PinSpec",
    "PinWord",
    "Poly",
    "PreconditionError",
    "RatGF",
    "VerificationError",
    "adjacency_condition",
    "amended_G",
    "box_decompose",
    "box_sum",
    "class_gf",
    "closure_gf",
    "coeffs",
    "complete_class_gf",
    "compose_representation",
    "contains",
    "diagram_points",
    "enumerate_pin_factors",
    "finite_closure_gf",
    "from_eventually_constant",
    "from_oneline",
    "growth_rate",
    "indecomposable_counts",
    "interior_gf",
    "is_box_indecomposable",
    "is_recurrent",
    "left_truncate",
    "minimal_centred_intervals",
    "normal_form",
    "one_quadrant",
    "parse_pin_spec",
    "parse_pin_word",
    "pi_map",
    "pin_factor",
    "point_quadrant",
    "remove_interior_point",
    "seq",
    "strip_origin",
    "subpatterns",
    "truncation_convergence",
    "__version__",
]
