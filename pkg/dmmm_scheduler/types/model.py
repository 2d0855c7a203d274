"""Immutable domain records shared by every module.

Records carry no behaviour beyond invariant checks; derived values
(matrix totals, schedule metrics) are computed by the modules that own them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Mapping, Optional, Tuple

from dmmm_scheduler.errors import InvalidRuleError, UnknownAlgorithmError

ALGORITHMS: Tuple[str, ...] = ("dmmm", "min-min", "max-min", "round-robin")
TIE_RULE = "ascending-id"

Window = Tuple[int, int]
CustomerWindow = Tuple[str, int, int]


@dataclass(frozen=True)
class Task:
    id: str
    user_id: str
    execution_time: int


@dataclass(frozen=True)
class UserProfile:
    id: str
    user_type: str
    priority: int


@dataclass(frozen=True)
class Criterion:
    name: str
    weight: int


@dataclass(frozen=True)
class RatedColumn:
    user_type: str
    rating: int


@dataclass(frozen=True)
class DecisionMatrix:
    """Weighted criteria by rated user types.

    Build through ``dmmm_scheduler.decision.build_matrix``; ``cells``,
    ``column_totals`` and ``score`` are derived from criteria and columns.
    """

    criteria: Tuple[Criterion, ...]
    columns: Tuple[RatedColumn, ...]
    cells: Tuple[Tuple[int, ...], ...]
    column_totals: Tuple[int, ...]
    score: int


@dataclass(frozen=True)
class Resource:
    id: str
    matrix: DecisionMatrix
    speed_factor: Fraction = Fraction(1)


@dataclass(frozen=True)
class SchedulerConfig:
    algorithm: str = "dmmm"
    priority_first: bool = False
    tie_rule: str = TIE_RULE

    def __post_init__(self) -> None:
        if self.algorithm not in ALGORITHMS:
            raise UnknownAlgorithmError(
                f"CONFIG ERROR: unknown algorithm {self.algorithm!r}; expected one of {', '.join(ALGORITHMS)}")


@dataclass(frozen=True)
class Scenario:
    users: Tuple[UserProfile, ...]
    tasks: Tuple[Task, ...]
    resources: Tuple[Resource, ...]
    scheduler: Optional[SchedulerConfig] = None


@dataclass(frozen=True)
class Assignment:
    task_id: str
    resource_id: str
    start: int
    finish: int


@dataclass(frozen=True)
class Schedule:
    algorithm: str
    resource_ids: Tuple[str, ...]
    assignments: Tuple[Assignment, ...]
    makespan: int
    utilization: Mapping[str, Fraction]
    waits: Mapping[str, int]


@dataclass(frozen=True)
class ScheduleMetrics:
    makespan: int
    utilization: Mapping[str, Fraction]
    mean_wait: Fraction
    max_wait: int


@dataclass(frozen=True)
class ComparisonRow:
    algorithm: str
    makespan: int
    mean_wait: Fraction
    max_wait: int
    utilization: Mapping[str, Fraction]


@dataclass(frozen=True)
class UsageRecord:
    customer_id: str
    resource_id: str
    bucket_start: int
    amount: int


@dataclass(frozen=True)
class UsageReport:
    horizon: int
    peak_threshold: int
    dormant_threshold: int
    customer_totals: Mapping[str, int]
    resource_totals: Mapping[str, Mapping[str, int]]
    peak_windows: Tuple[CustomerWindow, ...]
    dormant_windows: Tuple[CustomerWindow, ...]
    dominant_resources: Mapping[str, str] = field(default_factory=dict)
    provider_peak_windows: Tuple[Window, ...] = ()
    provider_dormant_windows: Tuple[Window, ...] = ()


@dataclass(frozen=True)
class ClassificationBand:
    user_type: str
    priority: int
    lower_bound: Fraction


@dataclass(frozen=True)
class ClassificationRule:
    """Quantile bands ordered from the highest priority down."""

    bands: Tuple[ClassificationBand, ...]

    def __post_init__(self) -> None:
        if not self.bands:
            raise InvalidRuleError("RULE ERROR: classification rule needs at least one band")
        priorities = [band.priority for band in self.bands]
        if len(set(priorities)) != len(priorities):
            raise InvalidRuleError("RULE ERROR: band priorities must be distinct")
        for band in self.bands:
            if not band.user_type:
                raise InvalidRuleError("RULE ERROR: band user_type must be nonempty")
            if band.priority < 1:
                raise InvalidRuleError(f"RULE ERROR: band {band.user_type!r} priority must be >= 1")
            if not 0 <= band.lower_bound <= 1:
                raise InvalidRuleError(f"RULE ERROR: band {band.user_type!r} lower bound must lie in [0, 1]")
        for upper, lower in zip(self.bands, self.bands[1:]):
            if not (upper.priority > lower.priority and upper.lower_bound > lower.lower_bound):
                raise InvalidRuleError(
                    "RULE ERROR: lower bounds must strictly decrease as priority decreases")
        if self.bands[-1].lower_bound != 0:
            raise InvalidRuleError("RULE ERROR: the lowest band must start at quantile 0")


@dataclass(frozen=True)
class RunManifest:
    """Run inputs plus the sha256 digest of every artifact the run wrote."""

    command: str
    scenario_path: Optional[str]
    algorithms: Tuple[str, ...]
    seed: Optional[int]
    out_dir: Optional[str]
    argv: Tuple[str, ...]
    outputs: Mapping[str, str] = field(default_factory=dict)

    def to_document(self) -> Dict[str, object]:
        return {
            "command": self.command,
            "scenario_path": self.scenario_path,
            "algorithms": list(self.algorithms),
            "seed": self.seed,
            "out_dir": self.out_dir,
            "argv": list(self.argv),
            "outputs": {name: self.outputs[name] for name in sorted(self.outputs)},
        }


@dataclass(frozen=True)
class MonitorResult:
    records: Tuple[UsageRecord, ...]
    report: UsageReport
    users: Tuple[UserProfile, ...]
    synthesized: bool


@dataclass(frozen=True)
class PipelineResult:
    monitor: MonitorResult
    scenario: Scenario
    schedule: Schedule
