"""Configuration and measurement ingestion.

The network configuration is JSON with a versioned schema::

    {
      "schema_version": 1,
      "network": {
        "id": "hetnet-1",
        "rans": [
          {"id": "ran1", "technology": "UMTS",
           "applications": [
             {"id": "voice1", "class": "voice",
              "category": "entertainment", "users": 12}
           ]}
        ]
      },
      "weight_rules": {                    # optional, defaults applied
        "categories": ["education", "health", "entertainment"],
        "rank_delta_scales": [[1, 3], [2, 5], [3, 7]],
        "rank_delta_cap_scale": 9,
        "user_ratio_buckets": [[1.25, 1], [2.0, 3], [3.0, 5], [4.0, 7]],
        "user_ratio_top_scale": 9,
        "judgment_overrides": [
          {"criterion": "purpose-of-usage", "over": "a", "under": "b",
           "scale": "k5"}
        ],
        "pair_overrides": [{"over": "a", "under": "b", "scale": "equal"}]
      },
      "profiles": {                        # optional, merged over defaults
        "voice": {"delay": {"best": 150, "worst": 400}}
      },
      "thresholds": {"good": 0.75, "average": 0.5},   # optional
      "ran_weighting": "uniform",          # or "users"
      "overrides": {                       # optional explicit weights/metrics
        "application_metrics": {"ran1": {"voice1": 0.62}},
        "application_weights": {"ran1": {"voice1": 0.5, "vs1": 0.5}},
        "ran_weights": {"ran1": 1.0},
        "parameter_weights": {"voice": {"delay": 0.5, "jitter": 0.25,
                                        "packet-loss": 0.25}}
      }
    }

Measurements are CSV with header ``ran_id,app_id,parameter,value,unit``;
rows are validated against the configuration and aggregated to per
(ran, app, parameter) means.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any

from .engine import (
    DEFAULT_PROFILES,
    DEFAULT_THRESHOLDS,
    PARAMETER_UNITS,
    PARAMETERS,
    ClassificationThresholds,
    ParameterProfile,
)
from .fuzzy import scale_by_name
from .rules import (
    DEFAULT_POLICY,
    CriterionJudgment,
    PairOverride,
    ServiceCategoryPolicy,
    WeightRuleConfig,
)

__all__ = [
    "ConfigError",
    "MeasurementError",
    "Application",
    "Ran",
    "Network",
    "WeightOverrides",
    "NetworkConfiguration",
    "MeasurementRow",
    "MeasurementSet",
    "load_config",
    "parse_config",
    "load_measurements",
    "parse_measurements",
]

SCHEMA_VERSION = 1
TECHNOLOGIES = ("UMTS", "WiMAX", "LTE", "other")
APP_CLASSES = ("VC", "voice", "VS", "other")
RAN_WEIGHTINGS = ("uniform", "users")


class ConfigError(ValueError):
    """Configuration defect, carrying the JSON path of the offending field."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


class MeasurementError(ValueError):
    """Measurement-file defect, carrying the 1-based CSV line number."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


@dataclass(frozen=True)
class Application:
    id: str
    app_class: str
    category: str
    users: int


@dataclass(frozen=True)
class Ran:
    id: str
    technology: str
    applications: tuple[Application, ...]

    def application(self, app_id: str) -> Application:
        for app in self.applications:
            if app.id == app_id:
                return app
        raise ValueError(f"RAN {self.id!r} has no application {app_id!r}")


@dataclass(frozen=True)
class Network:
    id: str
    rans: tuple[Ran, ...]

    def ran(self, ran_id: str) -> Ran:
        for ran in self.rans:
            if ran.id == ran_id:
                return ran
        raise ValueError(f"no RAN {ran_id!r} in network {self.id!r}")


@dataclass(frozen=True)
class WeightOverrides:
    """Explicit values that bypass derivation at each layer."""

    application_metrics: dict[str, dict[str, float]] = field(default_factory=dict)
    application_weights: dict[str, dict[str, float]] = field(default_factory=dict)
    ran_weights: dict[str, float] = field(default_factory=dict)
    parameter_weights: dict[str, dict[str, float]] = field(default_factory=dict)


@dataclass(frozen=True)
class NetworkConfiguration:
    schema_version: int
    network: Network
    weight_rules: WeightRuleConfig
    profiles: dict[str, dict[str, ParameterProfile]]
    thresholds: ClassificationThresholds
    ran_weighting: str
    overrides: WeightOverrides

    def profile_for(self, app_class: str, parameter: str) -> ParameterProfile | None:
        return self.profiles.get(app_class, {}).get(parameter)

    def with_pair_override(self, override: PairOverride) -> "NetworkConfiguration":
        """Copy with ``override`` prepended so it wins over configured pairs."""
        rules = replace(
            self.weight_rules, pair_overrides=(override,) + self.weight_rules.pair_overrides
        )
        return replace(self, weight_rules=rules)


def _expect(data: Any, kind: type, path: str, what: str) -> Any:
    if not isinstance(data, kind):
        raise ConfigError(path, f"expected {what}, got {type(data).__name__}")
    return data


def _expect_number(data: Any, path: str) -> float:
    if isinstance(data, bool) or not isinstance(data, (int, float)):
        raise ConfigError(path, f"expected a number, got {type(data).__name__}")
    return float(data)


def _parse_application(data: Any, path: str) -> Application:
    _expect(data, dict, path, "an object")
    app_id = _expect(data.get("id"), str, f"{path}.id", "a string")
    app_class = data.get("class")
    if app_class not in APP_CLASSES:
        raise ConfigError(f"{path}.class", f"application class must be one of {APP_CLASSES}, got {app_class!r}")
    category = _expect(data.get("category"), str, f"{path}.category", "a string")
    users = data.get("users")
    if isinstance(users, bool) or not isinstance(users, int) or users < 0:
        raise ConfigError(f"{path}.users", f"user count must be a nonnegative integer, got {users!r}")
    unknown = set(data) - {"id", "class", "category", "users"}
    if unknown:
        raise ConfigError(path, f"unknown application fields {sorted(unknown)}")
    return Application(app_id, app_class, category, users)


def _parse_ran(data: Any, path: str) -> Ran:
    _expect(data, dict, path, "an object")
    ran_id = _expect(data.get("id"), str, f"{path}.id", "a string")
    technology = data.get("technology")
    if technology not in TECHNOLOGIES:
        raise ConfigError(f"{path}.technology", f"technology must be one of {TECHNOLOGIES}, got {technology!r}")
    apps_data = _expect(data.get("applications"), list, f"{path}.applications", "a list")
    if not apps_data:
        raise ConfigError(f"{path}.applications", "RAN must declare at least one application")
    apps = tuple(
        _parse_application(a, f"{path}.applications[{i}]") for i, a in enumerate(apps_data)
    )
    seen: set[str] = set()
    for i, app in enumerate(apps):
        if app.id in seen:
            raise ConfigError(f"{path}.applications[{i}].id", f"duplicate application id {app.id!r}")
        seen.add(app.id)
    return Ran(ran_id, technology, apps)


def _parse_network(data: Any, path: str) -> Network:
    _expect(data, dict, path, "an object")
    net_id = _expect(data.get("id"), str, f"{path}.id", "a string")
    rans_data = _expect(data.get("rans"), list, f"{path}.rans", "a list")
    if not rans_data:
        raise ConfigError(f"{path}.rans", "network must declare at least one RAN")
    rans = tuple(_parse_ran(r, f"{path}.rans[{i}]") for i, r in enumerate(rans_data))
    seen: set[str] = set()
    for i, ran in enumerate(rans):
        if ran.id in seen:
            raise ConfigError(f"{path}.rans[{i}].id", f"duplicate RAN id {ran.id!r}")
        seen.add(ran.id)
    return Network(net_id, rans)


def _parse_scale_field(data: Any, path: str):
    try:
        return scale_by_name(_expect(data, str, path, "a scale name string"))
    except ValueError as exc:
        raise ConfigError(path, str(exc)) from None


def _parse_weight_rules(data: Any, path: str) -> WeightRuleConfig:
    if data is None:
        return WeightRuleConfig()
    _expect(data, dict, path, "an object")
    kwargs: dict[str, Any] = {}
    categories = data.get("categories")
    if categories is not None:
        _expect(categories, list, f"{path}.categories", "a list")
        if categories and all(isinstance(c, str) for c in categories):
            kwargs["policy"] = ServiceCategoryPolicy.from_ordered(categories)
        else:
            ranks = {}
            for i, entry in enumerate(categories):
                _expect(entry, dict, f"{path}.categories[{i}]", "a string or {name, rank} object")
                name = _expect(entry.get("name"), str, f"{path}.categories[{i}].name", "a string")
                rank = entry.get("rank")
                if isinstance(rank, bool) or not isinstance(rank, int):
                    raise ConfigError(f"{path}.categories[{i}].rank", f"expected an integer, got {rank!r}")
                ranks[name] = rank
            kwargs["policy"] = ServiceCategoryPolicy(ranks)
    for key in ("rank_delta_scales", "user_ratio_buckets"):
        if key in data:
            pairs = _expect(data[key], list, f"{path}.{key}", "a list of [value, scale] pairs")
            for i, p in enumerate(pairs):
                if not isinstance(p, list) or len(p) != 2:
                    raise ConfigError(f"{path}.{key}[{i}]", "expected a [value, scale] pair")
            kwargs[key] = tuple((p[0], p[1]) for p in pairs)
    for key in ("rank_delta_cap_scale", "user_ratio_top_scale"):
        if key in data:
            value = data[key]
            if isinstance(value, bool) or not isinstance(value, int):
                raise ConfigError(f"{path}.{key}", f"expected an integer, got {value!r}")
            kwargs[key] = value
    if "judgment_overrides" in data:
        entries = _expect(data["judgment_overrides"], list, f"{path}.judgment_overrides", "a list")
        overrides = []
        for i, entry in enumerate(entries):
            epath = f"{path}.judgment_overrides[{i}]"
            _expect(entry, dict, epath, "an object")
            overrides.append(
                CriterionJudgment(
                    criterion=_expect(entry.get("criterion"), str, f"{epath}.criterion", "a string"),
                    over=_expect(entry.get("over"), str, f"{epath}.over", "a string"),
                    under=_expect(entry.get("under"), str, f"{epath}.under", "a string"),
                    tfn=_parse_scale_field(entry.get("scale"), f"{epath}.scale"),
                )
            )
        kwargs["judgment_overrides"] = tuple(overrides)
    if "pair_overrides" in data:
        entries = _expect(data["pair_overrides"], list, f"{path}.pair_overrides", "a list")
        overrides = []
        for i, entry in enumerate(entries):
            epath = f"{path}.pair_overrides[{i}]"
            _expect(entry, dict, epath, "an object")
            overrides.append(
                PairOverride(
                    over=_expect(entry.get("over"), str, f"{epath}.over", "a string"),
                    under=_expect(entry.get("under"), str, f"{epath}.under", "a string"),
                    tfn=_parse_scale_field(entry.get("scale"), f"{epath}.scale"),
                )
            )
        kwargs["pair_overrides"] = tuple(overrides)
    unknown = set(data) - {
        "categories",
        "rank_delta_scales",
        "rank_delta_cap_scale",
        "user_ratio_buckets",
        "user_ratio_top_scale",
        "judgment_overrides",
        "pair_overrides",
    }
    if unknown:
        raise ConfigError(path, f"unknown weight_rules fields {sorted(unknown)}")
    try:
        return WeightRuleConfig(**kwargs)
    except ValueError as exc:
        raise ConfigError(path, str(exc)) from None


def _parse_profiles(data: Any, path: str) -> dict[str, dict[str, ParameterProfile]]:
    profiles = {cls: dict(params) for cls, params in DEFAULT_PROFILES.items()}
    if data is None:
        return profiles
    _expect(data, dict, path, "an object")
    for cls, params in data.items():
        if cls not in APP_CLASSES:
            raise ConfigError(f"{path}.{cls}", f"profile class must be one of {APP_CLASSES}")
        _expect(params, dict, f"{path}.{cls}", "an object")
        for parameter, bounds in params.items():
            ppath = f"{path}.{cls}.{parameter}"
            if parameter not in PARAMETERS:
                raise ConfigError(ppath, f"unknown parameter; expected one of {PARAMETERS}")
            _expect(bounds, dict, ppath, "an object")
            unknown = set(bounds) - {"best", "worst"}
            if unknown:
                raise ConfigError(ppath, f"unknown profile fields {sorted(unknown)}")
            best = _expect_number(bounds.get("best"), f"{ppath}.best")
            worst = _expect_number(bounds.get("worst"), f"{ppath}.worst")
            try:
                profile = ParameterProfile(parameter, best, worst, higher_is_better=best > worst)
            except ValueError as exc:
                raise ConfigError(ppath, str(exc)) from None
            profiles.setdefault(cls, {})[parameter] = profile
    return profiles


def _parse_thresholds(data: Any, path: str) -> ClassificationThresholds:
    if data is None:
        return DEFAULT_THRESHOLDS
    _expect(data, dict, path, "an object")
    unknown = set(data) - {"good", "average"}
    if unknown:
        raise ConfigError(path, f"unknown threshold fields {sorted(unknown)}")
    try:
        return ClassificationThresholds(
            good=_expect_number(data.get("good", DEFAULT_THRESHOLDS.good), f"{path}.good"),
            average=_expect_number(data.get("average", DEFAULT_THRESHOLDS.average), f"{path}.average"),
        )
    except ValueError as exc:
        raise ConfigError(path, str(exc)) from None


def _parse_weight_map(data: Any, path: str) -> dict[str, float]:
    _expect(data, dict, path, "an object")
    out = {}
    for key, value in data.items():
        out[key] = _expect_number(value, f"{path}.{key}")
        if out[key] < 0:
            raise ConfigError(f"{path}.{key}", f"weight must be nonnegative, got {value}")
    return out


def _parse_overrides(data: Any, path: str) -> WeightOverrides:
    if data is None:
        return WeightOverrides()
    _expect(data, dict, path, "an object")
    unknown = set(data) - {
        "application_metrics",
        "application_weights",
        "ran_weights",
        "parameter_weights",
    }
    if unknown:
        raise ConfigError(path, f"unknown override fields {sorted(unknown)}")
    app_metrics: dict[str, dict[str, float]] = {}
    if "application_metrics" in data:
        _expect(data["application_metrics"], dict, f"{path}.application_metrics", "an object")
        for ran_id, metrics in data["application_metrics"].items():
            mpath = f"{path}.application_metrics.{ran_id}"
            _expect(metrics, dict, mpath, "an object")
            app_metrics[ran_id] = {}
            for app_id, value in metrics.items():
                score = _expect_number(value, f"{mpath}.{app_id}")
                if not 0.0 <= score <= 1.0:
                    raise ConfigError(f"{mpath}.{app_id}", f"injected metric must lie in [0, 1], got {value}")
                app_metrics[ran_id][app_id] = score
    app_weights = {
        ran_id: _parse_weight_map(weights, f"{path}.application_weights.{ran_id}")
        for ran_id, weights in _expect(
            data.get("application_weights", {}), dict, f"{path}.application_weights", "an object"
        ).items()
    }
    ran_weights = _parse_weight_map(data.get("ran_weights", {}), f"{path}.ran_weights")
    parameter_weights = {}
    for cls, weights in _expect(
        data.get("parameter_weights", {}), dict, f"{path}.parameter_weights", "an object"
    ).items():
        if cls not in APP_CLASSES:
            raise ConfigError(f"{path}.parameter_weights.{cls}", f"class must be one of {APP_CLASSES}")
        parameter_weights[cls] = _parse_weight_map(weights, f"{path}.parameter_weights.{cls}")
        for parameter in parameter_weights[cls]:
            if parameter not in PARAMETERS:
                raise ConfigError(
                    f"{path}.parameter_weights.{cls}.{parameter}",
                    f"unknown parameter; expected one of {PARAMETERS}",
                )
    return WeightOverrides(app_metrics, app_weights, ran_weights, parameter_weights)


def _check_references(config: NetworkConfiguration) -> None:
    policy = config.weight_rules.policy
    for r, ran in enumerate(config.network.rans):
        for a, app in enumerate(ran.applications):
            if app.category not in policy.ranks:
                raise ConfigError(
                    f"$.network.rans[{r}].applications[{a}].category",
                    f"category {app.category!r} is not ranked by the service category policy",
                )
    known_pairs = {(ran.id, app.id) for ran in config.network.rans for app in ran.applications}
    app_ids = {app_id for _, app_id in known_pairs}
    for j, judgment in enumerate(config.weight_rules.judgment_overrides):
        for side, app_id in (("over", judgment.over), ("under", judgment.under)):
            if app_id not in app_ids:
                raise ConfigError(
                    f"$.weight_rules.judgment_overrides[{j}].{side}",
                    f"unknown application {app_id!r}",
                )
    for j, pair in enumerate(config.weight_rules.pair_overrides):
        for side, app_id in (("over", pair.over), ("under", pair.under)):
            if app_id not in app_ids:
                raise ConfigError(
                    f"$.weight_rules.pair_overrides[{j}].{side}",
                    f"unknown application {app_id!r}",
                )
    for field_name, per_ran in (
        ("application_metrics", config.overrides.application_metrics),
        ("application_weights", config.overrides.application_weights),
    ):
        for ran_id, mapping in per_ran.items():
            try:
                ran = config.network.ran(ran_id)
            except ValueError:
                raise ConfigError(f"$.overrides.{field_name}.{ran_id}", f"unknown RAN {ran_id!r}") from None
            for app_id in mapping:
                if (ran_id, app_id) not in known_pairs:
                    raise ConfigError(
                        f"$.overrides.{field_name}.{ran_id}.{app_id}",
                        f"RAN {ran_id!r} has no application {app_id!r}",
                    )
    for ran_id in config.overrides.ran_weights:
        try:
            config.network.ran(ran_id)
        except ValueError:
            raise ConfigError(f"$.overrides.ran_weights.{ran_id}", f"unknown RAN {ran_id!r}") from None


def parse_config(data: Any) -> NetworkConfiguration:
    """Validate a decoded JSON document and fill in defaults."""
    _expect(data, dict, "$", "an object")
    version = data.get("schema_version")
    if version != SCHEMA_VERSION:
        raise ConfigError("$.schema_version", f"expected {SCHEMA_VERSION}, got {version!r}")
    unknown = set(data) - {
        "schema_version",
        "network",
        "weight_rules",
        "profiles",
        "thresholds",
        "ran_weighting",
        "overrides",
    }
    if unknown:
        raise ConfigError("$", f"unknown top-level fields {sorted(unknown)}")
    ran_weighting = data.get("ran_weighting", "uniform")
    if ran_weighting not in RAN_WEIGHTINGS:
        raise ConfigError("$.ran_weighting", f"must be one of {RAN_WEIGHTINGS}, got {ran_weighting!r}")
    config = NetworkConfiguration(
        schema_version=version,
        network=_parse_network(data.get("network"), "$.network"),
        weight_rules=_parse_weight_rules(data.get("weight_rules"), "$.weight_rules"),
        profiles=_parse_profiles(data.get("profiles"), "$.profiles"),
        thresholds=_parse_thresholds(data.get("thresholds"), "$.thresholds"),
        ran_weighting=ran_weighting,
        overrides=_parse_overrides(data.get("overrides"), "$.overrides"),
    )
    _check_references(config)
    return config


def load_config(path: str | Path) -> NetworkConfiguration:
    """Load, validate and default-fill a configuration file."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError("$", f"invalid JSON: {exc}") from None
    return parse_config(data)


@dataclass(frozen=True)
class MeasurementRow:
    line: int
    ran_id: str
    app_id: str
    parameter: str
    value: float
    unit: str


@dataclass(frozen=True)
class MeasurementSet:
    """Validated rows plus per (ran, app, parameter) arithmetic means."""

    rows: tuple[MeasurementRow, ...]
    means: dict[tuple[str, str, str], float]

    def parameters_for(self, ran_id: str, app_id: str) -> dict[str, float]:
        return {
            parameter: value
            for (r, a, parameter), value in self.means.items()
            if r == ran_id and a == app_id
        }

    def has_app(self, ran_id: str, app_id: str) -> bool:
        return any(r == ran_id and a == app_id for (r, a, _) in self.means)


EXPECTED_HEADER = ["ran_id", "app_id", "parameter", "value", "unit"]


def parse_measurements(lines: list[str], config: NetworkConfiguration) -> MeasurementSet:
    reader = csv.reader(lines)
    try:
        header = next(reader)
    except StopIteration:
        raise MeasurementError(1, f"missing header; expected {','.join(EXPECTED_HEADER)}") from None
    if [h.strip() for h in header] != EXPECTED_HEADER:
        raise MeasurementError(1, f"bad header {header!r}; expected {','.join(EXPECTED_HEADER)}")
    known_pairs = {(ran.id, app.id) for ran in config.network.rans for app in ran.applications}
    rows: list[MeasurementRow] = []
    for line, record in enumerate(reader, start=2):
        if not record or all(not cell.strip() for cell in record):
            continue
        if len(record) != len(EXPECTED_HEADER):
            raise MeasurementError(line, f"expected {len(EXPECTED_HEADER)} fields, got {len(record)}")
        ran_id, app_id, parameter, value_text, unit = (cell.strip() for cell in record)
        if not any(ran.id == ran_id for ran in config.network.rans):
            raise MeasurementError(line, f"unknown RAN id {ran_id!r}")
        if (ran_id, app_id) not in known_pairs:
            raise MeasurementError(line, f"RAN {ran_id!r} has no application {app_id!r}")
        if parameter not in PARAMETERS:
            raise MeasurementError(line, f"unknown parameter {parameter!r}; expected one of {PARAMETERS}")
        try:
            value = float(value_text)
        except ValueError:
            raise MeasurementError(line, f"non-numeric value {value_text!r}") from None
        expected_unit = PARAMETER_UNITS[parameter]
        if unit != expected_unit:
            raise MeasurementError(line, f"unit for {parameter!r} must be {expected_unit!r}, got {unit!r}")
        if value < 0:
            raise MeasurementError(line, f"value for {parameter!r} must be nonnegative, got {value}")
        rows.append(MeasurementRow(line, ran_id, app_id, parameter, value, unit))
    groups: dict[tuple[str, str, str], list[float]] = {}
    for row in rows:
        groups.setdefault((row.ran_id, row.app_id, row.parameter), []).append(row.value)
    means = {key: sum(values) / len(values) for key, values in groups.items()}
    return MeasurementSet(tuple(rows), means)


def load_measurements(path: str | Path, config: NetworkConfiguration) -> MeasurementSet:
    """Load a measurement CSV and aggregate it against ``config``."""
    text = Path(path).read_text(encoding="utf-8")
    return parse_measurements(text.splitlines(), config)
