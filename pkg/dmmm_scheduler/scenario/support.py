from __future__ import annotations

import copy
import dataclasses
import hashlib
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

from dmmm_scheduler.monitoring.synthesis import synthesize_usage
from dmmm_scheduler.monitoring.usage_io import report_to_document, users_to_document, write_usage_csv
from dmmm_scheduler.scenario.parameters import id_key
from dmmm_scheduler.scenario.schema import map_to_schema
from dmmm_scheduler.scenario.serialization import dumps, scenario_to_document
from dmmm_scheduler.simulation.export import metrics_csv, schedule_csv
from dmmm_scheduler.simulation.metrics import comparison_row
from dmmm_scheduler.types.model import (
    ComparisonRow,
    RunManifest,
    Scenario,
    Schedule,
    SchedulerConfig,
    UsageRecord,
    UsageReport,
    UserProfile,
)
from dmmm_scheduler.types.options import MonitorParams

logger = logging.getLogger(__name__)


class SupportUtilities:

    def __init__(self, engine: 'SchedulingEngine') -> None:  # type: ignore # noqa: F821
        self.engine = engine
        self.outputs: Dict[str, str] = {}

    def resolve_config(
        self, scenario: Scenario, algorithm: Optional[str], priority_first: Optional[bool]
    ) -> SchedulerConfig:
        declared = scenario.scheduler
        if declared is not None and algorithm is not None and algorithm != declared.algorithm:
            logger.warning("algorithm %r overrides scenario scheduler %r", algorithm, declared.algorithm)
        chosen = algorithm or (declared.algorithm if declared else self.engine.algorithm)
        if priority_first is None:
            priority_first = declared.priority_first if declared else self.engine.priority_first
        return SchedulerConfig(algorithm=chosen, priority_first=priority_first)

    def usage_records(self, params: MonitorParams) -> List[UsageRecord]:
        if "records" in params:
            return list(params["records"])
        return synthesize_usage(
            params.get("seed", self.engine.seed),
            params.get("customers", self.engine.customers),
            params.get("resources", self.engine.resources),
            params.get("horizon", self.engine.horizon),
            params.get("profile", self.engine.profile),
        )

    def pipeline_identities(self, document: Dict[str, Any]) -> Dict[str, Union[int, List[str]]]:
        """Customers referenced by tasks and declared resource ids, falling back to configured counts."""
        mapped = map_to_schema(document, "ScenarioDocument")
        customers = sorted({task["user_id"] for task in mapped.get("tasks", [])}, key=id_key)
        resources = [resource["id"] for resource in mapped.get("resources", [])]
        return {
            "customers": customers or self.engine.customers,
            "resources": resources or self.engine.resources,
        }

    def inject_users(self, document: Dict[str, Any], users: Sequence[UserProfile]) -> Dict[str, Any]:
        injected = copy.deepcopy(document)
        if injected.get("users"):
            logger.info("replacing %d declared user(s) with classified profiles", len(injected["users"]))
        injected["users"] = users_to_document(users)
        return injected

    def emit(self, name: str, content: str) -> Optional[Path]:
        if not self.engine.out_dir:
            return None
        out_dir = Path(self.engine.out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        path = out_dir / name
        data = content.encode("utf-8")
        path.write_bytes(data)
        self.outputs[name] = hashlib.sha256(data).hexdigest()
        logger.debug("wrote %s", path)
        return path

    def emit_schedule(self, schedule: Schedule) -> None:
        self.emit("schedule.csv", schedule_csv(schedule))
        self.emit("metrics.csv", metrics_csv([comparison_row(schedule)]))

    def emit_comparison(self, rows: Sequence[ComparisonRow]) -> None:
        self.emit("compare.csv", metrics_csv(rows))

    def emit_monitoring(self, report: UsageReport, users: Sequence[UserProfile]) -> None:
        self.emit("report.json", dumps(report_to_document(report)))
        self.emit("users.json", dumps(users_to_document(users)))

    def emit_usage(self, records: Sequence[UsageRecord]) -> None:
        self.emit("usage.csv", write_usage_csv(records))

    def emit_scenario(self, scenario: Scenario) -> None:
        self.emit("scenario.json", dumps(scenario_to_document(scenario)))

    def emit_manifest(self, manifest: RunManifest) -> None:
        """Write ``manifest.json`` listing every artifact emitted so far."""
        recorded = dataclasses.replace(manifest, outputs=dict(self.outputs))
        self.emit("manifest.json", dumps(recorded.to_document()))
