"""Hyperbolic 3-space, its oriented-geodesic space, and the neutral Kahler structure."""

from .errors import (
    ChartBoundary,
    ChartExit,
    ChartMismatch,
    DegenerateNormalizer,
    GeodexError,
    LeavesChart,
    NearBoundary,
    OutsideChartU,
    ReflectedDiagonal,
    SingularPoint,
    StepFailure,
    TooFewSamples,
    TranslationCase,
)
from .geoflow import (
    GeodesicPath,
    GeoParams,
    geodesic_G,
    geodesic_G_mu,
    geodesic_velocity,
    integrate_geodesic_numeric,
    killing_of_geodesic,
    tangent_norm_constant,
)
from .hyp3 import (
    BallPoint,
    CTangent3,
    GeodesicUhs,
    NullFrame,
    Tangent3,
    UhsPoint,
    adapted_null_frame,
    ball_to_uhs,
    conserved_integrals,
    geodesic_point,
    jacobi_field,
    metric,
    metric_real,
    orthonormal_frame,
    uhs_to_ball,
    vertical_geodesic,
)
from .isometry import (
    HypKilling,
    LKilling,
    hyp_flow,
    hyp_killing_vector,
    induced_killing,
    l_action,
    l_killing_vector,
)
from .lspace import (
    MU,
    XI_ETA,
    CurvatureReport,
    GeodesicGlobal,
    LTangent,
    RSpherePoint,
    apply_J,
    curvature_at,
    endpoints_ball,
    gram_matrix,
    metric_G,
    mu_from_xieta,
    omega,
    tangent_to_mu,
    tangent_to_xieta,
    xieta_from_mu,
)
from .ruled import (
    SurfacePatch,
    export_csv,
    export_obj,
    fundamental_forms,
    is_totally_geodesic,
    mean_curvature,
    normalize_geodesic,
    sample_patch,
    second_fundamental_form,
    second_fundamental_form_closed,
    surface_point,
)
from .verify import SUITE_NAMES, CheckResult, run_suites

__version__ = "0.1.0"
