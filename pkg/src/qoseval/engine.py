"""Three-layer unified QoS metric.

Raw per-application parameter measurements are normalized into [0, 1]
scores against acceptable-range profiles, then combined by normalized
weighted sums: parameter scores into an application metric, application
metrics into a radio-access-network metric, and RAN metrics into the
network-configuration metric. Scores classify into poor / average / good.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Mapping

from .fahp import FuzzyComparisonMatrix, WeightVector, derive_weights
from .fuzzy import TFN, scale_tfn

__all__ = [
    "QosLevel",
    "ClassificationThresholds",
    "ParameterProfile",
    "PARAMETERS",
    "PARAMETER_UNITS",
    "DEFAULT_PROFILES",
    "DEFAULT_THRESHOLDS",
    "default_parameter_weights",
    "normalize_parameter",
    "application_metric",
    "ran_metric",
    "network_metric",
    "classify",
]

PARAMETERS = ("delay", "jitter", "packet-loss", "throughput")
PARAMETER_UNITS = {"delay": "ms", "jitter": "ms", "packet-loss": "percent", "throughput": "kbps"}


class QosLevel(str, Enum):
    POOR = "poor"
    AVERAGE = "average"
    GOOD = "good"


@dataclass(frozen=True)
class ClassificationThresholds:
    """Score cut-offs: good at or above ``good``, poor below ``average``."""

    good: float = 0.75
    average: float = 0.5

    def __post_init__(self):
        if not 0.0 < self.average < self.good <= 1.0:
            raise ValueError(
                f"thresholds must satisfy 0 < average < good <= 1, got "
                f"average={self.average}, good={self.good}"
            )


DEFAULT_THRESHOLDS = ClassificationThresholds()


@dataclass(frozen=True)
class ParameterProfile:
    """Acceptable range mapping a raw measurement onto a [0, 1] score.

    The score is 1 at or beyond ``best``, 0 at or beyond ``worst``, and
    linear in between. ``higher_is_better`` must agree with the ordering
    of the two thresholds.
    """

    parameter: str
    best: float
    worst: float
    higher_is_better: bool = False

    def __post_init__(self):
        if self.parameter not in PARAMETERS:
            raise ValueError(f"unknown parameter {self.parameter!r}; expected one of {PARAMETERS}")
        if self.best == self.worst:
            raise ValueError(f"profile for {self.parameter!r} must have best != worst")
        if self.higher_is_better and not self.best > self.worst:
            raise ValueError(f"higher-is-better profile for {self.parameter!r} needs best > worst")
        if not self.higher_is_better and not self.best < self.worst:
            raise ValueError(f"lower-is-better profile for {self.parameter!r} needs best < worst")

    @property
    def unit(self) -> str:
        return PARAMETER_UNITS[self.parameter]


# Deployment-policy defaults per application class. Voice tolerates more
# delay than video but is tighter on loss; video streaming and conferencing
# share one profile set. Throughput ships without a default profile.
DEFAULT_PROFILES: dict[str, dict[str, ParameterProfile]] = {
    "voice": {
        "delay": ParameterProfile("delay", best=150.0, worst=400.0),
        "jitter": ParameterProfile("jitter", best=20.0, worst=60.0),
        "packet-loss": ParameterProfile("packet-loss", best=1.0, worst=10.0),
    },
    "VC": {
        "delay": ParameterProfile("delay", best=250.0, worst=500.0),
        "jitter": ParameterProfile("jitter", best=10.0, worst=40.0),
        "packet-loss": ParameterProfile("packet-loss", best=1.0, worst=8.0),
    },
    "VS": {
        "delay": ParameterProfile("delay", best=250.0, worst=500.0),
        "jitter": ParameterProfile("jitter", best=10.0, worst=40.0),
        "packet-loss": ParameterProfile("packet-loss", best=1.0, worst=8.0),
    },
}

# Shipped pairwise comparisons behind the default parameter weights: delay
# moderately more important than jitter and packet loss, those two equal.
_PARAMETER_JUDGMENTS = {
    ("delay", "jitter"): scale_tfn(3),
    ("delay", "packet-loss"): scale_tfn(3),
    ("jitter", "packet-loss"): scale_tfn(1),
}


def default_parameter_weights(parameters: tuple[str, ...]) -> WeightVector:
    """Extent-analysis weights for the given parameters.

    Derived from the shipped comparison judgments; parameters without a
    shipped judgment (throughput) compare as equal. A single parameter
    gets weight 1.
    """
    if not parameters:
        raise ValueError("need at least one parameter to weight")
    if len(set(parameters)) != len(parameters):
        raise ValueError("duplicate parameter names")
    if len(parameters) == 1:
        return WeightVector({parameters[0]: 1.0})
    judgments: dict[tuple[str, str], TFN] = {}
    for i in range(len(parameters)):
        for j in range(i + 1, len(parameters)):
            pair = (parameters[i], parameters[j])
            if pair in _PARAMETER_JUDGMENTS:
                judgments[pair] = _PARAMETER_JUDGMENTS[pair]
            elif (pair[1], pair[0]) in _PARAMETER_JUDGMENTS:
                judgments[pair] = _PARAMETER_JUDGMENTS[(pair[1], pair[0])].reciprocal()
    matrix = FuzzyComparisonMatrix.from_upper_triangle(parameters, judgments)
    return derive_weights(matrix)


def normalize_parameter(value: float, profile: ParameterProfile) -> float:
    """Score a raw measurement against its profile, clamped to [0, 1]."""
    if not math.isfinite(value):
        raise ValueError(f"measurement for {profile.parameter!r} must be finite, got {value}")
    if value < 0:
        raise ValueError(f"measurement for {profile.parameter!r} must be nonnegative, got {value}")
    if profile.higher_is_better:
        if value >= profile.best:
            return 1.0
        if value <= profile.worst:
            return 0.0
        return (value - profile.worst) / (profile.best - profile.worst)
    if value <= profile.best:
        return 1.0
    if value >= profile.worst:
        return 0.0
    return (profile.worst - value) / (profile.worst - profile.best)


def _weighted_sum(values: Mapping[str, float], weights: WeightVector, what: str) -> float:
    if set(values.keys()) != set(weights.keys()):
        missing = sorted(set(weights.keys()) - set(values.keys()))
        extra = sorted(set(values.keys()) - set(weights.keys()))
        raise ValueError(
            f"{what} and weights must cover the same keys "
            f"(missing {missing or 'none'}, unweighted {extra or 'none'})"
        )
    if not weights.is_normalized():
        raise ValueError(f"weights over {what} must sum to 1, got {weights.total()!r}")
    return sum(weights[key] * values[key] for key in weights)


def application_metric(scores: Mapping[str, float], weights: WeightVector) -> float:
    """Application QoS metric: weighted sum of parameter scores."""
    return _weighted_sum(scores, weights, "parameter scores")


def ran_metric(app_metrics: Mapping[str, float], app_weights: WeightVector) -> float:
    """Radio-access-network metric: weighted sum of application metrics."""
    return _weighted_sum(app_metrics, app_weights, "application metrics")


def network_metric(ran_metrics: Mapping[str, float], ran_weights: WeightVector) -> float:
    """Network-configuration metric: weighted sum of RAN metrics."""
    return _weighted_sum(ran_metrics, ran_weights, "RAN metrics")


def classify(score: float, thresholds: ClassificationThresholds = DEFAULT_THRESHOLDS) -> QosLevel:
    """Map a unified metric in [0, 1] onto poor / average / good."""
    if not 0.0 <= score <= 1.0:
        raise ValueError(f"score must lie in [0, 1], got {score}")
    if score >= thresholds.good:
        return QosLevel.GOOD
    if score >= thresholds.average:
        return QosLevel.AVERAGE
    return QosLevel.POOR
