"""Context-driven construction of application comparison matrices.

Two criteria decide how important one application is relative to another:
the purpose of usage (its service category's rank in a deployment policy)
and the number of active users. Each criterion maps onto the nine-level
importance scale; the per-pair cell is the arithmetic mean of the two
criterion judgments, and the lower triangle is filled with reciprocals so
the produced matrix is exactly reciprocal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .fahp import FuzzyComparisonMatrix
from .fuzzy import TFN, scale_tfn, tfn_mean

__all__ = [
    "PURPOSE",
    "USERS",
    "CRITERIA",
    "ServiceCategoryPolicy",
    "CriterionJudgment",
    "PairOverride",
    "WeightRuleConfig",
    "DEFAULT_POLICY",
    "purpose_judgment",
    "users_judgment",
    "build_application_matrix",
]

PURPOSE = "purpose-of-usage"
USERS = "number-of-users"
CRITERIA = (PURPOSE, USERS)


@dataclass(frozen=True)
class ServiceCategoryPolicy:
    """Deployment-specific priority ranking of service categories.

    Rank 1 is the most important category; ranks must be unique positive
    integers.
    """

    ranks: dict[str, int]

    def __post_init__(self):
        object.__setattr__(self, "ranks", dict(self.ranks))
        if not self.ranks:
            raise ValueError("service category policy must rank at least one category")
        for name, rank in self.ranks.items():
            if not isinstance(rank, int) or rank < 1:
                raise ValueError(f"rank for category {name!r} must be a positive integer, got {rank!r}")
        if len(set(self.ranks.values())) != len(self.ranks):
            raise ValueError("category ranks must be unique")

    @classmethod
    def from_ordered(cls, names: Sequence[str]) -> "ServiceCategoryPolicy":
        """Policy from a most-important-first list of category names."""
        return cls({name: i + 1 for i, name in enumerate(names)})

    def rank(self, category: str) -> int:
        try:
            return self.ranks[category]
        except KeyError:
            raise ValueError(f"unknown service category {category!r}") from None


DEFAULT_POLICY = ServiceCategoryPolicy.from_ordered(["education", "health", "entertainment"])

# Rank-difference -> scale index; deltas past the table cap at the top scale.
DEFAULT_RANK_DELTA_SCALES: tuple[tuple[int, int], ...] = ((1, 3), (2, 5), (3, 7))
# User-count ratio buckets as (exclusive upper bound, scale index); ratios at
# or past the last bound take the top scale.
DEFAULT_USER_RATIO_BUCKETS: tuple[tuple[float, int], ...] = ((1.25, 1), (2.0, 3), (3.0, 5), (4.0, 7))
DEFAULT_TOP_SCALE = 9


@dataclass(frozen=True)
class CriterionJudgment:
    """Explicit judgment for one criterion on one ordered application pair."""

    criterion: str
    over: str
    under: str
    tfn: TFN

    def __post_init__(self):
        if self.criterion not in CRITERIA:
            raise ValueError(f"unknown criterion {self.criterion!r}; expected one of {CRITERIA}")
        if self.over == self.under:
            raise ValueError("judgment pair must reference two distinct applications")


@dataclass(frozen=True)
class PairOverride:
    """Aggregate-level cell override for one application pair.

    Takes precedence over both criterion judgments; used for what-if
    importance directives and fixed-importance fixtures.
    """

    over: str
    under: str
    tfn: TFN

    def __post_init__(self):
        if self.over == self.under:
            raise ValueError("pair override must reference two distinct applications")


@dataclass(frozen=True)
class WeightRuleConfig:
    """Tunable mapping from application context onto the importance scale."""

    policy: ServiceCategoryPolicy = DEFAULT_POLICY
    rank_delta_scales: tuple[tuple[int, int], ...] = DEFAULT_RANK_DELTA_SCALES
    rank_delta_cap_scale: int = DEFAULT_TOP_SCALE
    user_ratio_buckets: tuple[tuple[float, int], ...] = DEFAULT_USER_RATIO_BUCKETS
    user_ratio_top_scale: int = DEFAULT_TOP_SCALE
    judgment_overrides: tuple[CriterionJudgment, ...] = ()
    pair_overrides: tuple[PairOverride, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "rank_delta_scales", tuple((int(d), int(s)) for d, s in self.rank_delta_scales))
        object.__setattr__(self, "user_ratio_buckets", tuple((float(b), int(s)) for b, s in self.user_ratio_buckets))
        object.__setattr__(self, "judgment_overrides", tuple(self.judgment_overrides))
        object.__setattr__(self, "pair_overrides", tuple(self.pair_overrides))
        deltas = [d for d, _ in self.rank_delta_scales]
        if deltas != sorted(set(deltas)) or any(d < 1 for d in deltas):
            raise ValueError("rank deltas must be strictly increasing positive integers")
        bounds = [b for b, _ in self.user_ratio_buckets]
        if bounds != sorted(set(bounds)) or any(b <= 0 for b in bounds):
            raise ValueError("user-ratio bucket bounds must be strictly increasing and positive")
        for s in [s for _, s in self.rank_delta_scales] + [s for _, s in self.user_ratio_buckets] + [
            self.rank_delta_cap_scale,
            self.user_ratio_top_scale,
        ]:
            if not 1 <= s <= 9:
                raise ValueError(f"scale index must be in 1..9, got {s}")

    def _criterion_override(self, criterion: str, over: str, under: str) -> TFN | None:
        for j in self.judgment_overrides:
            if j.criterion == criterion and (j.over, j.under) == (over, under):
                return j.tfn
            if j.criterion == criterion and (j.over, j.under) == (under, over):
                return j.tfn.reciprocal()
        return None

    def _pair_override(self, over: str, under: str) -> TFN | None:
        for p in self.pair_overrides:
            if (p.over, p.under) == (over, under):
                return p.tfn
            if (p.over, p.under) == (under, over):
                return p.tfn.reciprocal()
        return None


def purpose_judgment(cat_i: str, cat_j: str, cfg: WeightRuleConfig) -> TFN:
    """Importance of category ``cat_i`` over ``cat_j`` from their policy ranks.

    Equal ranks give the identity judgment; a better rank by delta steps up
    the scale per the configured mapping (capped at the top scale); a worse
    rank yields the reciprocal of the mirrored judgment.
    """
    rank_i = cfg.policy.rank(cat_i)
    rank_j = cfg.policy.rank(cat_j)
    if rank_i == rank_j:
        return scale_tfn(1)
    if rank_i > rank_j:
        return purpose_judgment(cat_j, cat_i, cfg).reciprocal()
    delta = rank_j - rank_i
    for d, scale in cfg.rank_delta_scales:
        if delta == d:
            return scale_tfn(scale)
    return scale_tfn(cfg.rank_delta_cap_scale)


def users_judgment(n_i: int, n_j: int, cfg: WeightRuleConfig) -> TFN:
    """Importance of an application with ``n_i`` users over one with ``n_j``.

    The count ratio (with zero counts guarded to 1) is bucketed onto the
    scale; a smaller count yields the reciprocal of the mirrored judgment.
    """
    if n_i < 0 or n_j < 0:
        raise ValueError(f"user counts must be nonnegative, got ({n_i}, {n_j})")
    if n_i == 0 and n_j == 0:
        raise ValueError("cannot judge two applications that both have zero users")
    if n_i < n_j:
        return users_judgment(n_j, n_i, cfg).reciprocal()
    ratio = max(n_i, 1) / max(n_j, 1)
    for bound, scale in cfg.user_ratio_buckets:
        if ratio < bound:
            return scale_tfn(scale)
    return scale_tfn(cfg.user_ratio_top_scale)


def _aggregate_cell(app_i, app_j, cfg: WeightRuleConfig) -> TFN:
    id_i, cat_i, users_i = app_i
    id_j, cat_j, users_j = app_j
    override = cfg._pair_override(id_i, id_j)
    if override is not None:
        return override
    judgments = []
    for criterion in CRITERIA:
        tfn = cfg._criterion_override(criterion, id_i, id_j)
        if tfn is None:
            if criterion == PURPOSE:
                tfn = purpose_judgment(cat_i, cat_j, cfg)
            else:
                tfn = users_judgment(users_i, users_j, cfg)
        judgments.append(tfn)
    return tfn_mean(judgments)


def build_application_matrix(
    apps: Sequence[tuple[str, str, int]], cfg: WeightRuleConfig
) -> FuzzyComparisonMatrix:
    """Comparison matrix over ``apps`` given as (id, category, users) triples.

    Upper-triangle cells aggregate the two criterion judgments with the
    arithmetic mean (explicit overrides taking precedence); the lower
    triangle is reciprocal-filled so the result always validates cleanly.
    """
    if len(apps) < 2:
        raise ValueError(f"need at least 2 applications to compare, got {len(apps)}")
    ids = [a[0] for a in apps]
    if len(set(ids)) != len(ids):
        raise ValueError("application identifiers must be unique")
    judgments: dict[tuple[str, str], TFN] = {}
    for i in range(len(apps)):
        for j in range(i + 1, len(apps)):
            judgments[(ids[i], ids[j])] = _aggregate_cell(apps[i], apps[j], cfg)
    return FuzzyComparisonMatrix.from_upper_triangle(ids, judgments)
