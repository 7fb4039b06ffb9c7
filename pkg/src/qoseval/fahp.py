"""Fuzzy pairwise-comparison matrices and extent-analysis weight derivation.

Implements Chang's extent analysis: each alternative's fuzzy synthetic
extent is its row sum multiplied by the reciprocal of the matrix grand
total; raw weights are minimum possibility degrees between extents; the
final vector is the normalized raw vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .fuzzy import TFN, degree_of_possibility

__all__ = [
    "FuzzyComparisonMatrix",
    "MatrixViolation",
    "SyntheticExtent",
    "WeightVector",
    "validate_matrix",
    "synthetic_extents",
    "raw_weights",
    "normalize",
    "derive_weights",
]

RECIPROCITY_TOL = 1e-6
IDENTITY = TFN(1, 1, 1)


@dataclass(frozen=True)
class FuzzyComparisonMatrix:
    """n x n reciprocal matrix of TFNs over named alternatives.

    ``cells[i][j]`` is the relative importance of alternative i over j.
    Construction checks only shape; structural invariants (identity
    diagonal, reciprocity) are reported by :func:`validate_matrix` so
    callers can surface violations instead of crashing on them.
    """

    alternatives: tuple[str, ...]
    cells: tuple[tuple[TFN, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "alternatives", tuple(self.alternatives))
        object.__setattr__(self, "cells", tuple(tuple(row) for row in self.cells))
        n = len(self.alternatives)
        if n < 2:
            raise ValueError(f"comparison matrix needs at least 2 alternatives, got {n}")
        if len(set(self.alternatives)) != n:
            raise ValueError("alternative identifiers must be unique")
        if len(self.cells) != n or any(len(row) != n for row in self.cells):
            raise ValueError(f"cells must form an {n}x{n} grid")

    @property
    def size(self) -> int:
        return len(self.alternatives)

    def cell(self, over: str, under: str) -> TFN:
        i = self.alternatives.index(over)
        j = self.alternatives.index(under)
        return self.cells[i][j]

    @classmethod
    def from_upper_triangle(
        cls, alternatives: Sequence[str], judgments: Mapping[tuple[str, str], TFN]
    ) -> "FuzzyComparisonMatrix":
        """Build a matrix from upper-triangle judgments, auto-filling the
        diagonal with identity and the lower triangle with reciprocals.

        ``judgments`` may key either orientation of a pair; an entry keyed
        (j, i) with i < j is inverted into place. Missing pairs default to
        the identity judgment.
        """
        alts = tuple(alternatives)
        index = {a: k for k, a in enumerate(alts)}
        for (a, b) in judgments:
            if a not in index or b not in index:
                raise ValueError(f"judgment references unknown alternative in pair ({a!r}, {b!r})")
            if a == b:
                raise ValueError(f"judgment pairs must be distinct, got ({a!r}, {b!r})")
        n = len(alts)
        grid: list[list[TFN]] = [[IDENTITY] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                if (alts[i], alts[j]) in judgments:
                    cell = judgments[(alts[i], alts[j])]
                elif (alts[j], alts[i]) in judgments:
                    cell = judgments[(alts[j], alts[i])].reciprocal()
                else:
                    cell = IDENTITY
                grid[i][j] = cell
                grid[j][i] = cell.reciprocal()
        return cls(alts, tuple(tuple(row) for row in grid))


@dataclass(frozen=True)
class MatrixViolation:
    """A structural defect found in a comparison matrix."""

    kind: str  # "diagonal" or "reciprocity"
    row: int
    col: int
    message: str


def validate_matrix(
    matrix: FuzzyComparisonMatrix, reciprocity_tol: float = RECIPROCITY_TOL
) -> list[MatrixViolation]:
    """Check identity diagonal and reciprocity; list every violating cell.

    Returns violations rather than raising so callers can report them all.
    Matrices whose cells are per-criterion aggregates are reciprocal only
    approximately (the mean of reciprocals is not the reciprocal of the
    mean), so such matrices should be checked with a looser tolerance.
    """
    violations: list[MatrixViolation] = []
    n = matrix.size
    for i in range(n):
        d = matrix.cells[i][i]
        if d.as_tuple() != (1.0, 1.0, 1.0):
            violations.append(
                MatrixViolation(
                    "diagonal", i, i,
                    f"diagonal cell ({i}, {i}) must be (1, 1, 1), got {d}",
                )
            )
    for i in range(n):
        for j in range(i + 1, n):
            expected = matrix.cells[i][j].reciprocal()
            actual = matrix.cells[j][i]
            deltas = [abs(x - y) for x, y in zip(actual.as_tuple(), expected.as_tuple())]
            if max(deltas) > reciprocity_tol:
                violations.append(
                    MatrixViolation(
                        "reciprocity", j, i,
                        f"cell ({j}, {i}) = {actual} is not the reciprocal of "
                        f"cell ({i}, {j}) = {matrix.cells[i][j]} (max delta {max(deltas):.3g})",
                    )
                )
    return violations


@dataclass(frozen=True)
class SyntheticExtent:
    """Fuzzy share of one alternative in the whole matrix."""

    alternative: str
    extent: TFN


def synthetic_extents(matrix: FuzzyComparisonMatrix) -> list[SyntheticExtent]:
    """Row sums times the reciprocal of the grand total.

    Component-wise: (row_l / total_u, row_m / total_m, row_u / total_l).
    """
    row_l = [sum(c.l for c in row) for row in matrix.cells]
    row_m = [sum(c.m for c in row) for row in matrix.cells]
    row_u = [sum(c.u for c in row) for row in matrix.cells]
    total_l = sum(row_l)
    total_m = sum(row_m)
    total_u = sum(row_u)
    return [
        SyntheticExtent(alt, TFN(row_l[i] / total_u, row_m[i] / total_m, row_u[i] / total_l))
        for i, alt in enumerate(matrix.alternatives)
    ]


@dataclass(frozen=True)
class WeightVector:
    """Nonnegative weights keyed by alternative id.

    Raw (unnormalized) vectors from :func:`raw_weights` are also carried by
    this type; :func:`normalize` produces the sum-to-one form.
    """

    weights: dict[str, float]

    def __post_init__(self):
        object.__setattr__(self, "weights", dict(self.weights))
        for key, value in self.weights.items():
            if value < 0:
                raise ValueError(f"weight for {key!r} must be nonnegative, got {value}")

    def __getitem__(self, key: str) -> float:
        return self.weights[key]

    def __iter__(self):
        return iter(self.weights)

    def __len__(self) -> int:
        return len(self.weights)

    def keys(self):
        return self.weights.keys()

    def items(self):
        return self.weights.items()

    def total(self) -> float:
        return sum(self.weights.values())

    def is_normalized(self, tol: float = 1e-9) -> bool:
        return abs(self.total() - 1.0) <= tol


def raw_weights(extents: Sequence[SyntheticExtent]) -> WeightVector:
    """Minimum possibility degree of each extent over all the others.

    At least one component is exactly 1 (the alternative whose modal value
    is maximal dominates every comparison).
    """
    if len(extents) < 2:
        raise ValueError(f"need at least 2 extents to rank, got {len(extents)}")
    out: dict[str, float] = {}
    for i, e in enumerate(extents):
        others = [o.extent for j, o in enumerate(extents) if j != i]
        out[e.alternative] = min(degree_of_possibility(e.extent, o) for o in others)
    return WeightVector(out)


def normalize(weights: WeightVector) -> WeightVector:
    """Divide each component by the vector sum so the output sums to 1."""
    total = weights.total()
    if total <= 0:
        raise ValueError("cannot normalize an all-zero weight vector")
    return WeightVector({key: value / total for key, value in weights.items()})


def derive_weights(matrix: FuzzyComparisonMatrix) -> WeightVector:
    """Full extent-analysis pipeline: extents -> raw weights -> normalize."""
    return normalize(raw_weights(synthetic_extents(matrix)))
