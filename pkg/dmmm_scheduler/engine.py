from __future__ import annotations

import logging
from typing import List, Optional

from typing_extensions import Unpack

from dmmm_scheduler.monitoring.classify import DEFAULT_RULE, classify_users
from dmmm_scheduler.monitoring.report import build_report
from dmmm_scheduler.monitoring.store import ingest_usage
from dmmm_scheduler.monitoring.windows import check_thresholds
from dmmm_scheduler.scenario.serialization import scenario_from_document
from dmmm_scheduler.scenario.support import SupportUtilities
from dmmm_scheduler.scheduling.schedulers import compare as compare_algorithms
from dmmm_scheduler.scheduling.schedulers import schedule as run_schedule
from dmmm_scheduler.types.model import (
    ALGORITHMS,
    ClassificationRule,
    ComparisonRow,
    MonitorResult,
    PipelineResult,
    Schedule,
    SchedulerConfig,
)
from dmmm_scheduler.types.options import (
    CompareParams,
    EngineConfig,
    MonitorParams,
    PipelineParams,
    Profile,
    ScheduleParams,
)

logger = logging.getLogger(__name__)

DEFAULT_PEAK_THRESHOLD = 50
DEFAULT_DORMANT_THRESHOLD = 10


class SchedulingEngine:

    def __init__(self, **config: Unpack[EngineConfig]) -> None:
        self.algorithm: str = config.get("algorithm", "dmmm")
        self.priority_first: bool = config.get("priority_first", False)
        self.peak_threshold: int = config.get("peak_threshold", DEFAULT_PEAK_THRESHOLD)
        self.dormant_threshold: int = config.get("dormant_threshold", DEFAULT_DORMANT_THRESHOLD)
        self.seed: int = config.get("seed", 1)
        self.out_dir: Optional[str] = config.get("out_dir")
        self.rule: ClassificationRule = config.get("rule", DEFAULT_RULE)
        self.workers: int = config.get("workers", 1)
        self.customers: int = config.get("customers", 4)
        self.resources: int = config.get("resources", 3)
        self.horizon: int = config.get("horizon", 24)
        self.profile: Profile = config.get("profile", "diurnal")
        SchedulerConfig(algorithm=self.algorithm)
        self.support = SupportUtilities(self)

    def schedule(self, **params: Unpack[ScheduleParams]) -> Schedule:
        if "scenario" not in params:
            raise ValueError("scenario is required for scheduling operations")
        scenario = params["scenario"]
        config = self.support.resolve_config(scenario, params.get("algorithm"), params.get("priority_first"))
        result = run_schedule(scenario, config)
        self.support.emit_schedule(result)
        return result

    def compare(self, **params: Unpack[CompareParams]) -> List[ComparisonRow]:
        if "scenario" not in params:
            raise ValueError("scenario is required for scheduling operations")
        scenario = params["scenario"]
        priority_first = params.get("priority_first", self.priority_first)
        rows = compare_algorithms(
            scenario,
            list(params.get("algorithms", ALGORITHMS)),
            priority_first=priority_first,
            workers=self.workers,
        )
        self.support.emit_comparison(rows)
        return rows

    def monitor(self, **params: Unpack[MonitorParams]) -> MonitorResult:
        peak_threshold = params.get("peak_threshold", self.peak_threshold)
        dormant_threshold = params.get("dormant_threshold", self.dormant_threshold)
        check_thresholds(peak_threshold, dormant_threshold)
        synthesized = "records" not in params
        records = self.support.usage_records(params)
        store = ingest_usage(records)
        report = build_report(store, peak_threshold, dormant_threshold)
        roster = params.get("customers", ())
        users = classify_users(report, self.rule, () if isinstance(roster, int) else roster)
        if synthesized:
            self.support.emit_usage(records)
        self.support.emit_monitoring(report, users)
        return MonitorResult(records=tuple(records), report=report, users=tuple(users), synthesized=synthesized)

    def pipeline(self, **params: Unpack[PipelineParams]) -> PipelineResult:
        if "document" not in params:
            raise ValueError("scenario document is required for pipeline runs")
        document = params["document"]
        monitor_params: MonitorParams = {
            key: value for key, value in params.items()  # type: ignore[misc]
            if key not in ("document", "priority_first")
        }
        identities = self.support.pipeline_identities(document)
        monitor_params.setdefault("customers", identities["customers"])
        if "records" not in monitor_params:
            monitor_params.setdefault("resources", identities["resources"])
        monitored = self.monitor(**monitor_params)

        scenario = scenario_from_document(self.support.inject_users(document, monitored.users))
        self.support.emit_scenario(scenario)
        config = SchedulerConfig(algorithm="dmmm", priority_first=params.get("priority_first", self.priority_first))
        result = run_schedule(scenario, config)
        self.support.emit_schedule(result)
        logger.info(
            "pipeline classified %d customer(s) and scheduled %d task(s)", len(monitored.users), len(scenario.tasks))
        return PipelineResult(monitor=monitored, scenario=scenario, schedule=result)
