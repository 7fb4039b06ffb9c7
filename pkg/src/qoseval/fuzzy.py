"""Triangular fuzzy numbers and possibility-degree comparisons.

A triangular fuzzy number (TFN) encodes an imprecise importance ratio as a
triple (l, m, u): membership rises linearly from l to the modal value m and
falls back to zero at u. Supports must be strictly positive so reciprocals
stay well-defined.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "TFN",
    "ScaleLevel",
    "IMPORTANCE_SCALE",
    "scale_tfn",
    "scale_by_name",
    "tfn_mean",
    "degree_of_possibility",
    "min_degree_of_possibility",
]


@dataclass(frozen=True)
class TFN:
    """Triangular fuzzy number with 0 < l <= m <= u.

    Degenerate triples (l == m == u) are allowed and represent crisp
    judgments.
    """

    l: float
    m: float
    u: float

    def __post_init__(self):
        object.__setattr__(self, "l", float(self.l))
        object.__setattr__(self, "m", float(self.m))
        object.__setattr__(self, "u", float(self.u))
        if not self.l > 0:
            raise ValueError(f"TFN lower bound must be positive, got l={self.l}")
        if not (self.l <= self.m <= self.u):
            raise ValueError(f"TFN must satisfy l <= m <= u, got ({self.l}, {self.m}, {self.u})")

    def __add__(self, other: "TFN") -> "TFN":
        if not isinstance(other, TFN):
            return NotImplemented
        return TFN(self.l + other.l, self.m + other.m, self.u + other.u)

    def reciprocal(self) -> "TFN":
        """Multiplicative inverse: (l, m, u) -> (1/u, 1/m, 1/l)."""
        return TFN(1.0 / self.u, 1.0 / self.m, 1.0 / self.l)

    def membership(self, x: float) -> float:
        """Degree to which x belongs to this fuzzy number, in [0, 1]."""
        if x < self.l or x > self.u:
            return 0.0
        if x == self.m:
            return 1.0
        if x < self.m:
            return (x - self.l) / (self.m - self.l)
        return (self.u - x) / (self.u - self.m)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.l, self.m, self.u)

    def __repr__(self) -> str:
        return f"TFN({self.l:g}, {self.m:g}, {self.u:g})"


def tfn_mean(values: Sequence[TFN] | Iterable[TFN]) -> TFN:
    """Element-wise arithmetic mean of one or more TFNs."""
    values = list(values)
    if not values:
        raise ValueError("cannot take the mean of an empty sequence of TFNs")
    n = len(values)
    return TFN(
        sum(v.l for v in values) / n,
        sum(v.m for v in values) / n,
        sum(v.u for v in values) / n,
    )


def degree_of_possibility(b: TFN, a: TFN) -> float:
    """Possibility degree V(b >= a) that b outranks a, in [0, 1].

    Equals the height of the highest intersection point of the two
    membership functions: 1 when b's modal value already dominates,
    0 when the supports are disjoint with a entirely above b, and the
    intersection ordinate otherwise.
    """
    if b.m >= a.m:
        return 1.0
    if a.l >= b.u:
        return 0.0
    # Falling edge of b meets rising edge of a; denominator is strictly
    # negative here because both earlier branches were skipped.
    return (a.l - b.u) / ((b.m - b.u) - (a.m - a.l))


def min_degree_of_possibility(b: TFN, others: Sequence[TFN]) -> float:
    """Minimum of V(b >= a) over all a in others."""
    if not others:
        raise ValueError("need at least one fuzzy number to compare against")
    return min(degree_of_possibility(b, a) for a in others)


@dataclass(frozen=True)
class ScaleLevel:
    """One level of the nine-point fuzzy importance scale."""

    index: int
    label: str
    tfn: TFN


# Nine-level importance scale used for pairwise judgments. Odd levels carry
# the named anchors; even levels are intermediate values.
IMPORTANCE_SCALE: tuple[ScaleLevel, ...] = (
    ScaleLevel(1, "equal", TFN(1, 1, 1)),
    ScaleLevel(2, "intermediate", TFN(1 / 2, 3 / 4, 1)),
    ScaleLevel(3, "moderate", TFN(2 / 3, 1, 3 / 2)),
    ScaleLevel(4, "intermediate", TFN(1, 3 / 2, 2)),
    ScaleLevel(5, "strong", TFN(3 / 2, 2, 5 / 2)),
    ScaleLevel(6, "intermediate", TFN(2, 5 / 2, 3)),
    ScaleLevel(7, "very-strong", TFN(5 / 2, 3, 7 / 2)),
    ScaleLevel(8, "intermediate", TFN(3, 7 / 2, 4)),
    ScaleLevel(9, "extreme", TFN(7 / 2, 4, 9 / 2)),
)

_LABEL_TO_INDEX = {"equal": 1, "moderate": 3, "strong": 5, "very-strong": 7, "extreme": 9}


def scale_tfn(index: int) -> TFN:
    """TFN for scale level ``index`` (1..9)."""
    if not isinstance(index, int) or not 1 <= index <= 9:
        raise ValueError(f"scale index must be an integer in 1..9, got {index!r}")
    return IMPORTANCE_SCALE[index - 1].tfn


def scale_by_name(name: str) -> TFN:
    """Resolve a scale token to its TFN.

    Accepts "k1".."k9", reciprocal forms "1/k1".."1/k9", and the unique
    level labels ("equal", "moderate", "strong", "very-strong", "extreme").
    The label "intermediate" is ambiguous and must be given as k2/k4/k6/k8.
    """
    token = name.strip().lower()
    inverted = False
    if token.startswith("1/"):
        inverted = True
        token = token[2:]
    if token in _LABEL_TO_INDEX:
        index = _LABEL_TO_INDEX[token]
    elif token.startswith("k") and token[1:].isdigit():
        index = int(token[1:])
        if not 1 <= index <= 9:
            raise ValueError(f"unknown scale name {name!r}: index out of range 1..9")
    elif token == "intermediate":
        raise ValueError("scale label 'intermediate' is ambiguous; use k2, k4, k6 or k8")
    else:
        raise ValueError(f"unknown scale name {name!r}")
    tfn = scale_tfn(index)
    return tfn.reciprocal() if inverted else tfn
