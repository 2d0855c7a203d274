from __future__ import annotations

from typing import Any, Dict, List, Optional, Sequence, TypedDict, Union
from typing import Literal

from dmmm_scheduler.types.model import ClassificationRule, Scenario, UsageRecord

Profile = Literal["flat", "bursty", "diurnal"]


class EngineConfig(TypedDict, total=False):
    algorithm: str
    priority_first: bool
    peak_threshold: int
    dormant_threshold: int
    seed: int
    out_dir: Optional[str]
    rule: ClassificationRule
    workers: int
    customers: int
    resources: int
    horizon: int
    profile: Profile


class SchedulerSettingsDocument(TypedDict, total=False):
    algorithm: str
    priority_first: bool


class CriterionDocument(TypedDict):
    name: str
    weight: int


class ColumnDocument(TypedDict):
    user_type: str
    rating: int


class _MatrixDocumentRequired(TypedDict):
    criteria: List[CriterionDocument]


class MatrixDocument(_MatrixDocumentRequired, total=False):
    columns: List[ColumnDocument]


class _ResourceDocumentRequired(TypedDict):
    id: str
    matrix: MatrixDocument


class ResourceDocument(_ResourceDocumentRequired, total=False):
    speed_factor: Union[int, str]


class UserDocument(TypedDict):
    id: str
    user_type: str
    priority: int


class TaskDocument(TypedDict):
    id: str
    user_id: str
    execution_time: int


class ScenarioDocument(TypedDict, total=False):
    users: List[UserDocument]
    tasks: List[TaskDocument]
    resources: List[ResourceDocument]
    scheduler: SchedulerSettingsDocument


class _ScheduleParamsRequired(TypedDict):
    scenario: Scenario


class ScheduleParams(_ScheduleParamsRequired, total=False):
    algorithm: str
    priority_first: bool


class _CompareParamsRequired(TypedDict):
    scenario: Scenario


class CompareParams(_CompareParamsRequired, total=False):
    algorithms: Sequence[str]
    priority_first: bool


class MonitorParams(TypedDict, total=False):
    records: Sequence[UsageRecord]
    customers: Union[int, Sequence[str]]
    resources: Union[int, Sequence[str]]
    horizon: int
    profile: Profile
    seed: int
    peak_threshold: int
    dormant_threshold: int


class _PipelineParamsRequired(TypedDict):
    document: Dict[str, Any]


class PipelineParams(_PipelineParamsRequired, MonitorParams, total=False):
    priority_first: bool


class SynthesisOptions(TypedDict, total=False):
    base: int
    period: int
