"""Evaluation pipeline: measurements + configuration -> layered QoS report.

Application importance weights are re-derived per RAN over the applications
actually present (measured or metric-injected), so adding or removing an
application reshapes the weights of the others. What-if runs re-evaluate
with one pairwise importance judgment overridden and report the deltas.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .config import Application, MeasurementSet, NetworkConfiguration
from .engine import (
    PARAMETERS,
    application_metric,
    classify,
    default_parameter_weights,
    network_metric,
    normalize_parameter,
    ran_metric,
)
from .fahp import (
    FuzzyComparisonMatrix,
    WeightVector,
    normalize,
    raw_weights,
    synthetic_extents,
)
from .fuzzy import scale_by_name
from .report import (
    ApplicationReport,
    EvaluationReport,
    MatrixSnapshot,
    RanReport,
    WhatIfResult,
)
from .rules import PairOverride, WeightRuleConfig, build_application_matrix

__all__ = [
    "EvaluationError",
    "ImportanceDirective",
    "derive_application_weights",
    "evaluate",
    "whatif",
]


class EvaluationError(ValueError):
    """Raised when a configuration/measurement combination cannot be evaluated."""


@dataclass(frozen=True)
class ImportanceDirective:
    """One overridden pairwise judgment: subject <scale> object.

    The scale token is a level name with an optional ``-over`` suffix
    ("extreme-over", "moderate-over"), "equal", or a raw "k1".."k9".
    """

    subject: str
    scale: str
    object: str

    def __post_init__(self):
        if self.subject == self.object:
            raise ValueError("what-if directive must reference two distinct applications")

    def pair_override(self) -> PairOverride:
        token = self.scale
        if token.endswith("-over"):
            token = token[: -len("-over")]
        return PairOverride(self.subject, self.object, scale_by_name(token))

    def __str__(self) -> str:
        return f"{self.subject} {self.scale} {self.object}"


def _matrix_snapshot(matrix: FuzzyComparisonMatrix) -> MatrixSnapshot:
    return MatrixSnapshot(
        alternatives=matrix.alternatives,
        cells=tuple(tuple(cell.as_tuple() for cell in row) for row in matrix.cells),
    )


def derive_application_weights(
    apps: Sequence[Application], rules: WeightRuleConfig
) -> tuple[WeightVector, WeightVector | None, FuzzyComparisonMatrix | None]:
    """Normalized weights for ``apps``, plus raw weights and the matrix.

    A single application trivially gets weight 1 with no matrix.
    """
    if not apps:
        raise EvaluationError("cannot derive weights for an empty application list")
    if len(apps) == 1:
        return WeightVector({apps[0].id: 1.0}), None, None
    matrix = build_application_matrix([(a.id, a.category, a.users) for a in apps], rules)
    raw = raw_weights(synthetic_extents(matrix))
    return normalize(raw), raw, matrix


def _renormalized_subset(
    weights: dict[str, float], wanted: Sequence[str], what: str, warnings: list[str]
) -> WeightVector:
    """Restrict explicit weights to ``wanted`` keys and renormalize.

    Keys absent from ``weights`` are an error; extra keys are dropped with
    a warning before renormalizing.
    """
    missing = [key for key in wanted if key not in weights]
    if missing:
        raise EvaluationError(f"{what}: no weight configured for {missing}")
    extra = sorted(set(weights) - set(wanted))
    if extra:
        warnings.append(f"{what}: dropping weights for absent {extra}; renormalizing")
    subset = WeightVector({key: weights[key] for key in wanted})
    if subset.total() <= 0:
        raise EvaluationError(f"{what}: weights sum to zero after restriction")
    return normalize(subset)


def _application_report(
    config: NetworkConfiguration,
    ran_id: str,
    app: Application,
    measurements: MeasurementSet,
    warnings: list[str],
) -> ApplicationReport:
    where = f"application {app.id!r} in RAN {ran_id!r}"
    means = measurements.parameters_for(ran_id, app.id)
    injected = config.overrides.application_metrics.get(ran_id, {}).get(app.id)
    if injected is not None:
        return ApplicationReport(
            app_id=app.id,
            app_class=app.app_class,
            measurements=means,
            scores={},
            parameter_weights={},
            metric=injected,
            level=classify(injected, config.thresholds).value,
            metric_injected=True,
        )
    scores: dict[str, float] = {}
    for parameter in (p for p in PARAMETERS if p in means):
        profile = config.profile_for(app.app_class, parameter)
        if profile is None:
            raise EvaluationError(
                f"{where}: no profile for measured parameter {parameter!r} "
                f"(class {app.app_class!r}); add one under $.profiles"
            )
        scores[parameter] = normalize_parameter(means[parameter], profile)
    profiled = set(config.profiles.get(app.app_class, {}))
    unmeasured = [p for p in PARAMETERS if p in profiled and p not in scores]
    if unmeasured:
        warnings.append(
            f"{where}: no measurements for {unmeasured}; weights cover measured parameters only"
        )
    explicit = config.overrides.parameter_weights.get(app.app_class)
    if explicit is not None:
        weights = _renormalized_subset(
            explicit, list(scores), f"parameter weights for {where}", warnings
        )
    else:
        weights = default_parameter_weights(tuple(scores))
    metric = application_metric(scores, weights)
    return ApplicationReport(
        app_id=app.id,
        app_class=app.app_class,
        measurements=means,
        scores=scores,
        parameter_weights=dict(weights.items()),
        metric=metric,
        level=classify(metric, config.thresholds).value,
    )


def _ran_report(
    config: NetworkConfiguration,
    ran,
    measurements: MeasurementSet,
    warnings: list[str],
) -> RanReport:
    injected = config.overrides.application_metrics.get(ran.id, {})
    present = [
        app
        for app in ran.applications
        if measurements.has_app(ran.id, app.id) or app.id in injected
    ]
    if not present:
        raise EvaluationError(
            f"RAN {ran.id!r} has no measured applications (and no injected metrics)"
        )
    absent = [app.id for app in ran.applications if app not in present]
    if absent:
        warnings.append(
            f"RAN {ran.id!r}: applications {absent} have no measurements and are excluded"
        )
    app_reports = tuple(
        _application_report(config, ran.id, app, measurements, warnings) for app in present
    )
    explicit = config.overrides.application_weights.get(ran.id)
    raw = None
    matrix = None
    if explicit is not None:
        weights = _renormalized_subset(
            explicit, [a.id for a in present], f"application weights for RAN {ran.id!r}", warnings
        )
    else:
        weights, raw, matrix = derive_application_weights(present, config.weight_rules)
        zeroed = sorted(app_id for app_id, w in weights.items() if w == 0.0)
        if zeroed:
            warnings.append(
                f"RAN {ran.id!r}: applications {zeroed} received zero importance weight"
            )
    metric = ran_metric({a.app_id: a.metric for a in app_reports}, weights)
    return RanReport(
        ran_id=ran.id,
        technology=ran.technology,
        applications=app_reports,
        application_weights=dict(weights.items()),
        raw_application_weights=dict(raw.items()) if raw is not None else None,
        comparison_matrix=_matrix_snapshot(matrix) if matrix is not None else None,
        metric=metric,
        level=classify(metric, config.thresholds).value,
    )


def _ran_weights(
    config: NetworkConfiguration, ran_reports: Sequence[RanReport], warnings: list[str]
) -> WeightVector:
    ids = [r.ran_id for r in ran_reports]
    if config.overrides.ran_weights:
        return _renormalized_subset(config.overrides.ran_weights, ids, "RAN weights", warnings)
    if config.ran_weighting == "users":
        totals = {}
        for report in ran_reports:
            ran = config.network.ran(report.ran_id)
            present = {a.app_id for a in report.applications}
            totals[ran.id] = float(
                sum(app.users for app in ran.applications if app.id in present)
            )
        if sum(totals.values()) <= 0:
            raise EvaluationError("user-proportional RAN weighting needs at least one active user")
        return normalize(WeightVector(totals))
    return WeightVector({ran_id: 1.0 / len(ids) for ran_id in ids})


def evaluate(config: NetworkConfiguration, measurements: MeasurementSet) -> EvaluationReport:
    """Run the full pipeline and return a self-contained report.

    Deterministic: the same configuration and measurements always produce
    an identical report.
    """
    warnings: list[str] = []
    ran_reports = tuple(
        _ran_report(config, ran, measurements, warnings) for ran in config.network.rans
    )
    weights = _ran_weights(config, ran_reports, warnings)
    metric = network_metric({r.ran_id: r.metric for r in ran_reports}, weights)
    return EvaluationReport(
        network_id=config.network.id,
        rans=ran_reports,
        ran_weights=dict(weights.items()),
        metric=metric,
        level=classify(metric, config.thresholds).value,
        warnings=tuple(warnings),
    )


def whatif(
    config: NetworkConfiguration,
    measurements: MeasurementSet,
    directive: ImportanceDirective,
) -> WhatIfResult:
    """Evaluate baseline and directive-modified configurations side by side."""
    app_ids = {app.id for ran in config.network.rans for app in ran.applications}
    for app_id in (directive.subject, directive.object):
        if app_id not in app_ids:
            raise EvaluationError(f"what-if directive references unknown application {app_id!r}")
    override = directive.pair_override()  # validates the scale token
    shared = [
        ran.id
        for ran in config.network.rans
        if {directive.subject, directive.object} <= {a.id for a in ran.applications}
    ]
    baseline = evaluate(config, measurements)
    modified_config = config.with_pair_override(override)
    modified = evaluate(modified_config, measurements)
    extra_warnings = []
    if not shared:
        extra_warnings.append(
            f"no RAN hosts both {directive.subject!r} and {directive.object!r}; "
            "directive has no effect"
        )
    for ran_id in shared:
        if ran_id in config.overrides.application_weights:
            extra_warnings.append(
                f"RAN {ran_id!r} uses explicit application weights; directive is masked there"
            )
    if extra_warnings:
        modified = EvaluationReport(
            network_id=modified.network_id,
            rans=modified.rans,
            ran_weights=modified.ran_weights,
            metric=modified.metric,
            level=modified.level,
            warnings=modified.warnings + tuple(extra_warnings),
            schema_version=modified.schema_version,
        )
    ran_deltas = {
        after.ran_id: after.metric - before.metric
        for before, after in zip(baseline.rans, modified.rans)
    }
    return WhatIfResult(
        directive=str(directive),
        baseline=baseline,
        modified=modified,
        network_delta=modified.metric - baseline.metric,
        ran_deltas=ran_deltas,
    )
