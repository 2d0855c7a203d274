"""Scenario documents: JSON text <-> validated Scenario."""

from typing import Any, Dict, List, Optional, cast

import simplejson

from dmmm_scheduler.decision.matrix import build_matrix, matrix_from_priorities
from dmmm_scheduler.errors import ScenarioParseError
from dmmm_scheduler.scenario.parameters import format_speed_factor, positive_int, speed_factor
from dmmm_scheduler.scenario.schema import map_to_schema
from dmmm_scheduler.scenario.validation import validate_scenario
from dmmm_scheduler.types.model import (
    Criterion,
    DecisionMatrix,
    Resource,
    Scenario,
    SchedulerConfig,
    Task,
    UserProfile,
)
from dmmm_scheduler.types.options import ScenarioDocument


def loads(text: str) -> Any:
    try:
        return simplejson.loads(text, use_decimal=True)
    except simplejson.JSONDecodeError as exc:
        raise ScenarioParseError(f"PARSE ERROR: malformed JSON document: {exc}") from exc


def dumps(document: Any) -> str:
    return simplejson.dumps(document, indent=2) + "\n"


def read_document(path: str) -> Dict[str, Any]:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise ScenarioParseError(f"PARSE ERROR: unable to read {path}: {exc}") from exc
    return loads(text)


def load_scenario(path: str) -> Scenario:
    return scenario_from_document(read_document(path))


def dump_scenario(scenario: Scenario) -> str:
    return dumps(scenario_to_document(scenario))


def scenario_from_document(document: Any) -> Scenario:
    mapped = cast(ScenarioDocument, map_to_schema(document, "ScenarioDocument"))
    users = [
        UserProfile(
            id=user["id"],
            user_type=user["user_type"],
            priority=positive_int(user["priority"], "priority"),
        )
        for user in mapped.get("users", [])
    ]
    tasks = [
        Task(
            id=task["id"],
            user_id=task["user_id"],
            execution_time=positive_int(task["execution_time"], "duration"),
        )
        for task in mapped.get("tasks", [])
    ]
    resources = [
        Resource(
            id=resource["id"],
            matrix=_matrix_from_document(cast(Dict[str, Any], resource["matrix"]), users),
            speed_factor=speed_factor(resource.get("speed_factor", 1)),
        )
        for resource in mapped.get("resources", [])
    ]
    scheduler: Optional[SchedulerConfig] = None
    if "scheduler" in mapped:
        settings = mapped["scheduler"]
        scheduler = SchedulerConfig(
            algorithm=settings.get("algorithm", "dmmm"),
            priority_first=settings.get("priority_first", False),
        )
    return validate_scenario(tasks, users, resources, scheduler)


def scenario_to_document(scenario: Scenario) -> Dict[str, Any]:
    document: Dict[str, Any] = {
        "users": [
            {"id": user.id, "user_type": user.user_type, "priority": user.priority}
            for user in scenario.users
        ],
        "tasks": [
            {"id": task.id, "user_id": task.user_id, "execution_time": task.execution_time}
            for task in scenario.tasks
        ],
        "resources": [
            {
                "id": resource.id,
                "speed_factor": format_speed_factor(resource.speed_factor),
                "matrix": _matrix_to_document(resource.matrix),
            }
            for resource in scenario.resources
        ],
    }
    if scenario.scheduler is not None:
        document["scheduler"] = {
            "algorithm": scenario.scheduler.algorithm,
            "priority_first": scenario.scheduler.priority_first,
        }
    return document


def _matrix_from_document(matrix: Dict[str, Any], users: List[UserProfile]) -> DecisionMatrix:
    criteria = [
        Criterion(name=criterion["name"], weight=positive_int(criterion["weight"], "weight"))
        for criterion in matrix["criteria"]
    ]
    if "columns" not in matrix:
        return matrix_from_priorities(criteria, users)
    columns = [
        (column["user_type"], positive_int(column["rating"], "rating"))
        for column in matrix["columns"]
    ]
    return build_matrix(criteria, columns)


def _matrix_to_document(matrix: DecisionMatrix) -> Dict[str, Any]:
    return {
        "criteria": [{"name": criterion.name, "weight": criterion.weight} for criterion in matrix.criteria],
        "columns": [{"user_type": column.user_type, "rating": column.rating} for column in matrix.columns],
    }
