"""Unified QoS evaluation for heterogeneous networks.

Computes application, radio-access-network and network-configuration QoS
metrics as importance-weighted sums, with the application importance
weights derived dynamically from service-category and user-count context
via fuzzy pairwise comparison and extent analysis.
"""

from .config import (
    Application,
    ConfigError,
    MeasurementError,
    MeasurementSet,
    Network,
    NetworkConfiguration,
    Ran,
    load_config,
    load_measurements,
)
from .engine import (
    DEFAULT_PROFILES,
    DEFAULT_THRESHOLDS,
    ClassificationThresholds,
    ParameterProfile,
    QosLevel,
    application_metric,
    classify,
    network_metric,
    normalize_parameter,
    ran_metric,
)
from .evaluation import (
    EvaluationError,
    ImportanceDirective,
    derive_application_weights,
    evaluate,
    whatif,
)
from .fahp import (
    FuzzyComparisonMatrix,
    SyntheticExtent,
    WeightVector,
    derive_weights,
    normalize,
    raw_weights,
    synthetic_extents,
    validate_matrix,
)
from .fuzzy import (
    IMPORTANCE_SCALE,
    TFN,
    degree_of_possibility,
    min_degree_of_possibility,
    scale_by_name,
    scale_tfn,
    tfn_mean,
)
from .report import EvaluationReport, WhatIfResult, parse_report, render_report, render_whatif
from .rules import (
    ServiceCategoryPolicy,
    WeightRuleConfig,
    build_application_matrix,
    purpose_judgment,
    users_judgment,
)

__version__ = "0.1.0"

__all__ = [
    "TFN",
    "IMPORTANCE_SCALE",
    "scale_tfn",
    "scale_by_name",
    "tfn_mean",
    "degree_of_possibility",
    "min_degree_of_possibility",
    "FuzzyComparisonMatrix",
    "SyntheticExtent",
    "WeightVector",
    "validate_matrix",
    "synthetic_extents",
    "raw_weights",
    "normalize",
    "derive_weights",
    "ServiceCategoryPolicy",
    "WeightRuleConfig",
    "purpose_judgment",
    "users_judgment",
    "build_application_matrix",
    "QosLevel",
    "ClassificationThresholds",
    "ParameterProfile",
    "DEFAULT_PROFILES",
    "DEFAULT_THRESHOLDS",
    "normalize_parameter",
    "application_metric",
    "ran_metric",
    "network_metric",
    "classify",
    "ConfigError",
    "MeasurementError",
    "Application",
    "Ran",
    "Network",
    "NetworkConfiguration",
    "MeasurementSet",
    "load_config",
    "load_measurements",
    "EvaluationError",
    "ImportanceDirective",
    "derive_application_weights",
    "evaluate",
    "whatif",
    "EvaluationReport",
    "WhatIfResult",
    "render_report",
    "render_whatif",
    "parse_report",
    "__version__",
]
