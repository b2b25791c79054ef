"""panelscope: diagnostics engine and explorer backend for country-year panel data."""

from .client import IndicatorRequest, WdiClient
from .dissimilarity import (
    DissimilarityMatrix,
    VariationRecord,
    compute_dissimilarity,
    compute_variation,
)
from .features import (
    TemporalRecord,
    TrendShapeRecord,
    acf1,
    compute_temporal_features,
    compute_trend_shape_features,
    crossing_points,
    flat_spot,
    linearity_curvature,
    smoothness,
    trend_strength,
)
from .indices import (
    METRICS,
    DiagnosticRecord,
    HighlightSet,
    add_group_info,
    compute_diagnostic_indices,
    highlight_threshold,
    normalized_metric_table,
    records_to_frame,
)
from .panel import (
    ExclusionReport,
    GroupVariable,
    IndicatorDataset,
    MissingnessGrid,
    MissingnessSummary,
    ValidPanel,
    get_valid_data,
    group_variable,
    missingness_grid,
    missingness_summary,
    valid_subset,
)
from .smoothing import OrthoBasis, SmootherResult, orthogonal_poly, supersmooth, trend_shape_regression

__version__ = "0.1.0"

__all__ = [
    "IndicatorRequest",
    "WdiClient",
    "IndicatorDataset",
    "ValidPanel",
    "ExclusionReport",
    "GroupVariable",
    "MissingnessSummary",
    "MissingnessGrid",
    "get_valid_data",
    "valid_subset",
    "group_variable",
    "missingness_summary",
    "missingness_grid",
    "SmootherResult",
    "OrthoBasis",
    "supersmooth",
    "orthogonal_poly",
    "trend_shape_regression",
    "DissimilarityMatrix",
    "VariationRecord",
    "compute_dissimilarity",
    "compute_variation",
    "TrendShapeRecord",
    "TemporalRecord",
    "trend_strength",
    "linearity_curvature",
    "smoothness",
    "crossing_points",
    "flat_spot",
    "acf1",
    "compute_trend_shape_features",
    "compute_temporal_features",
    "METRICS",
    "DiagnosticRecord",
    "HighlightSet",
    "compute_diagnostic_indices",
    "add_group_info",
    "highlight_threshold",
    "normalized_metric_table",
    "records_to_frame",
    "__version__",
]
