from typing import Any

from .decision import best_user_type, build_matrix, column_total, matrix_score, rank_resources
from .engine import SchedulingEngine
from .monitoring import classify_users, ingest_usage, synthesize_usage
from .scenario.serialization import load_scenario, scenario_from_document, scenario_to_document
from .scenario.validation import validate_scenario
from .scheduling import compare, dmmm_schedule, max_min_schedule, min_min_schedule, round_robin_schedule, schedule
from .simulation import execute, oracle_execute


def engine(**kwargs: Any) -> SchedulingEngine:
    return SchedulingEngine(**kwargs)


__all__ = [
    "SchedulingEngine",
    "best_user_type",
    "build_matrix",
    "classify_users",
    "column_total",
    "compare",
    "dmmm_schedule",
    "engine",
    "execute",
    "ingest_usage",
    "load_scenario",
    "matrix_score",
    "max_min_schedule",
    "min_min_schedule",
    "oracle_execute",
    "rank_resources",
    "round_robin_schedule",
    "scenario_from_document",
    "scenario_to_document",
    "schedule",
    "synthesize_usage",
    "validate_scenario",
]
