"""Evaluation reports: self-contained records plus text/JSON rendering.

A report carries everything needed to recompute its own metrics: raw
measurement means, normalized scores, the weight vectors used at every
layer, and the derived comparison matrices for auditability. JSON output
round-trips losslessly through :func:`parse_report`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

__all__ = [
    "MatrixSnapshot",
    "ApplicationReport",
    "RanReport",
    "EvaluationReport",
    "WhatIfResult",
    "render_report",
    "render_whatif",
    "parse_report",
]

REPORT_SCHEMA_VERSION = 1


@dataclass(frozen=True)
class MatrixSnapshot:
    """Comparison matrix captured for auditability, cells as (l, m, u)."""

    alternatives: tuple[str, ...]
    cells: tuple[tuple[tuple[float, float, float], ...], ...]

    def to_dict(self) -> dict[str, Any]:
        return {
            "alternatives": list(self.alternatives),
            "cells": [[list(cell) for cell in row] for row in self.cells],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "MatrixSnapshot":
        return cls(
            alternatives=tuple(data["alternatives"]),
            cells=tuple(tuple(tuple(cell) for cell in row) for row in data["cells"]),
        )


@dataclass(frozen=True)
class ApplicationReport:
    app_id: str
    app_class: str
    measurements: dict[str, float]
    scores: dict[str, float]
    parameter_weights: dict[str, float]
    metric: float
    level: str
    metric_injected: bool = False

    def to_dict(self) -> dict[str, Any]:
        return {
            "app_id": self.app_id,
            "app_class": self.app_class,
            "measurements": dict(self.measurements),
            "scores": dict(self.scores),
            "parameter_weights": dict(self.parameter_weights),
            "metric": self.metric,
            "level": self.level,
            "metric_injected": self.metric_injected,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "ApplicationReport":
        return cls(
            app_id=data["app_id"],
            app_class=data["app_class"],
            measurements=dict(data["measurements"]),
            scores=dict(data["scores"]),
            parameter_weights=dict(data["parameter_weights"]),
            metric=data["metric"],
            level=data["level"],
            metric_injected=data["metric_injected"],
        )


@dataclass(frozen=True)
class RanReport:
    ran_id: str
    technology: str
    applications: tuple[ApplicationReport, ...]
    application_weights: dict[str, float]
    raw_application_weights: dict[str, float] | None
    comparison_matrix: MatrixSnapshot | None
    metric: float
    level: str

    def to_dict(self) -> dict[str, Any]:
        return {
            "ran_id": self.ran_id,
            "technology": self.technology,
            "applications": [a.to_dict() for a in self.applications],
            "application_weights": dict(self.application_weights),
            "raw_application_weights": (
                dict(self.raw_application_weights)
                if self.raw_application_weights is not None
                else None
            ),
            "comparison_matrix": (
                self.comparison_matrix.to_dict() if self.comparison_matrix is not None else None
            ),
            "metric": self.metric,
            "level": self.level,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "RanReport":
        return cls(
            ran_id=data["ran_id"],
            technology=data["technology"],
            applications=tuple(ApplicationReport.from_dict(a) for a in data["applications"]),
            application_weights=dict(data["application_weights"]),
            raw_application_weights=(
                dict(data["raw_application_weights"])
                if data["raw_application_weights"] is not None
                else None
            ),
            comparison_matrix=(
                MatrixSnapshot.from_dict(data["comparison_matrix"])
                if data["comparison_matrix"] is not None
                else None
            ),
            metric=data["metric"],
            level=data["level"],
        )


@dataclass(frozen=True)
class EvaluationReport:
    network_id: str
    rans: tuple[RanReport, ...]
    ran_weights: dict[str, float]
    metric: float
    level: str
    warnings: tuple[str, ...] = ()
    schema_version: int = REPORT_SCHEMA_VERSION

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema_version": self.schema_version,
            "network_id": self.network_id,
            "rans": [r.to_dict() for r in self.rans],
            "ran_weights": dict(self.ran_weights),
            "metric": self.metric,
            "level": self.level,
            "warnings": list(self.warnings),
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "EvaluationReport":
        return cls(
            network_id=data["network_id"],
            rans=tuple(RanReport.from_dict(r) for r in data["rans"]),
            ran_weights=dict(data["ran_weights"]),
            metric=data["metric"],
            level=data["level"],
            warnings=tuple(data["warnings"]),
            schema_version=data["schema_version"],
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


@dataclass(frozen=True)
class WhatIfResult:
    """Baseline and modified evaluations plus per-layer metric deltas."""

    directive: str
    baseline: EvaluationReport
    modified: EvaluationReport
    network_delta: float
    ran_deltas: dict[str, float] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {
            "directive": self.directive,
            "baseline": self.baseline.to_dict(),
            "modified": self.modified.to_dict(),
            "network_delta": self.network_delta,
            "ran_deltas": dict(self.ran_deltas),
        }


def parse_report(text: str) -> EvaluationReport:
    """Inverse of ``render_report(report, "json")``."""
    return EvaluationReport.from_dict(json.loads(text))


def _matrix_lines(matrix: MatrixSnapshot, indent: str) -> list[str]:
    lines = []
    width = max(len(a) for a in matrix.alternatives)
    for alt, row in zip(matrix.alternatives, matrix.cells):
        cells = "  ".join(f"({c[0]:.3f}, {c[1]:.3f}, {c[2]:.3f})" for c in row)
        lines.append(f"{indent}{alt:<{width}}  {cells}")
    return lines


def _text_report(report: EvaluationReport) -> str:
    lines = [
        f"Network {report.network_id}",
        f"  QoS metric: {report.metric:.3f}  [{report.level}]",
    ]
    for ran in report.rans:
        weight = report.ran_weights[ran.ran_id]
        lines.append(
            f"  RAN {ran.ran_id} ({ran.technology})  weight {weight:.3f}  "
            f"metric {ran.metric:.3f}  [{ran.level}]"
        )
        for app in ran.applications:
            weight = ran.application_weights[app.app_id]
            injected = "  (injected)" if app.metric_injected else ""
            lines.append(
                f"    {app.app_id} ({app.app_class})  weight {weight:.3f}  "
                f"metric {app.metric:.3f}  [{app.level}]{injected}"
            )
            for parameter in app.scores:
                lines.append(
                    f"      {parameter}: {app.measurements[parameter]:.3f} -> "
                    f"score {app.scores[parameter]:.3f} (weight {app.parameter_weights[parameter]:.3f})"
                )
        if ran.comparison_matrix is not None:
            lines.append("    comparison matrix:")
            lines.extend(_matrix_lines(ran.comparison_matrix, "      "))
        if ran.raw_application_weights is not None:
            raw = "  ".join(f"{k}={v:.3f}" for k, v in ran.raw_application_weights.items())
            lines.append(f"    raw weights: {raw}")
    for warning in report.warnings:
        lines.append(f"  warning: {warning}")
    return "\n".join(lines) + "\n"


def render_report(report: EvaluationReport, fmt: str = "text") -> str:
    """Render a report as a layered text table or as lossless JSON."""
    if fmt == "json":
        return report.to_json()
    if fmt == "text":
        return _text_report(report)
    raise ValueError(f"unknown report format {fmt!r}; expected 'text' or 'json'")


def render_whatif(result: WhatIfResult, fmt: str = "text") -> str:
    """Render a what-if comparison; text notes when nothing changed."""
    if fmt == "json":
        return json.dumps(result.to_dict(), indent=2)
    if fmt != "text":
        raise ValueError(f"unknown report format {fmt!r}; expected 'text' or 'json'")
    lines = [f"What-if: {result.directive}", "", "--- baseline ---"]
    lines.append(render_report(result.baseline, "text").rstrip("\n"))
    lines.append("")
    lines.append("--- modified ---")
    lines.append(render_report(result.modified, "text").rstrip("\n"))
    lines.append("")
    changed = abs(result.network_delta) > 1e-12 or any(
        abs(d) > 1e-12 for d in result.ran_deltas.values()
    )
    if not changed:
        lines.append("no change")
    else:
        lines.append(f"network metric delta: {result.network_delta:+.3f}")
        for ran_id, delta in result.ran_deltas.items():
            lines.append(f"RAN {ran_id} metric delta: {delta:+.3f}")
    return "\n".join(lines) + "\n"
