"""Exact analysis of planar polynomial vector fields.

Core objects: Gaussian-rational polynomial algebra, affine fields and their
meromorphic extensions to the projective plane, point blow-ups and Seidenberg
resolution, local indices along separatrices, semi-completeness obstruction
rules, and the completeness-verdict pipeline.
"""

from .algebra import BiPoly, GaussRat, UniPoly, homogeneous_parts, poly_gcd, rational_roots
from .blowup import BlowupResult, blow_down_check, blow_up
from .charts import (
    AFFINE,
    S_CHART,
    U_CHART,
    InfinityScan,
    InfinitySingularity,
    MeroField,
    cross_chart_check,
    make_mero_field,
    singularities_at_infinity,
    to_chart,
    transport,
)
from .fields import PolyVectorField, SaturationResult, foliation_order_at, infinity_invariant, saturate
from .invariants import (
    ConservationReport,
    CurveWitness,
    EigenData,
    InvariantValues,
    asymptotic_order,
    check_conservation,
    classify_singularity,
    dicritical_hint,
    eigen_data,
    index_along,
    invariant_values,
    milnor_number,
    multiplicity_along,
)
from .models import z_0_12, z_0_12_tower, z_1_00, z_1_00_tower, z_1_11, z_1_11_tower
from .parse import ParseError, format_field, format_polynomial, parse_polynomial, parse_vector_field
from .pipeline import (
    TheoremAForm,
    TopComponentClass,
    Verdict,
    classify_top_component,
    completeness_verdict,
    invariant_line_escape,
    replay_certificate,
    theorem_a_match,
)
from .resolution import (
    AdaptedPolesReport,
    ResolutionTree,
    adapted_poles,
    dual_graph_dot,
    seidenberg_resolve,
)
from .rules import (
    LaurentGerm,
    ModelTag,
    SaddleNodeData,
    ScVerdict,
    check_le31,
    classify_saddle_node,
    recognize_model,
    sc_1d_germ,
    timeform_residues,
)
