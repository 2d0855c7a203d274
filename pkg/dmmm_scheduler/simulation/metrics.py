from __future__ import annotations

from fractions import Fraction
from typing import Dict, Optional, Sequence

from dmmm_scheduler.types.model import Assignment, ComparisonRow, Schedule, ScheduleMetrics


def summarize(algorithm: str, resource_ids: Sequence[str], assignments: Sequence[Assignment]) -> Schedule:
    makespan = max((assignment.finish for assignment in assignments), default=0)
    return Schedule(
        algorithm=algorithm,
        resource_ids=tuple(resource_ids),
        assignments=tuple(assignments),
        makespan=makespan,
        utilization=_utilization(resource_ids, assignments, makespan),
        waits={assignment.task_id: assignment.start for assignment in assignments},
    )


def metrics(schedule: Schedule, horizon: Optional[int] = None) -> ScheduleMetrics:
    """Makespan, utilization over ``horizon`` (default: the makespan) and task waits."""
    span = schedule.makespan if horizon is None else horizon
    waits = [assignment.start for assignment in schedule.assignments]
    return ScheduleMetrics(
        makespan=schedule.makespan,
        utilization=_utilization(schedule.resource_ids, schedule.assignments, span),
        mean_wait=Fraction(sum(waits), len(waits)) if waits else Fraction(0),
        max_wait=max(waits, default=0),
    )


def _utilization(resource_ids: Sequence[str], assignments: Sequence[Assignment], span: int) -> Dict[str, Fraction]:
    busy = {resource_id: 0 for resource_id in resource_ids}
    for assignment in assignments:
        busy[assignment.resource_id] = busy.get(assignment.resource_id, 0) + assignment.finish - assignment.start
    if span <= 0:
        return {resource_id: Fraction(0) for resource_id in busy}
    return {resource_id: Fraction(time, span) for resource_id, time in busy.items()}


def comparison_row(schedule: Schedule) -> ComparisonRow:
    summary = metrics(schedule)
    return ComparisonRow(
        algorithm=schedule.algorithm,
        makespan=summary.makespan,
        mean_wait=summary.mean_wait,
        max_wait=summary.max_wait,
        utilization=summary.utilization,
    )
