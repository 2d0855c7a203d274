"""CSV renderings of schedules and their metrics."""

from __future__ import annotations

import csv
import io
from fractions import Fraction
from typing import List, Sequence

from dmmm_scheduler.types.model import ComparisonRow, Schedule

SCHEDULE_HEADER = ["task_id", "resource_id", "start", "finish"]
METRICS_HEADER = ["algorithm", "makespan", "mean_wait", "max_wait", "mean_utilization"]


def schedule_csv(schedule: Schedule) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(SCHEDULE_HEADER)
    for assignment in schedule.assignments:
        writer.writerow([assignment.task_id, assignment.resource_id, assignment.start, assignment.finish])
    return buffer.getvalue()


def metrics_csv(rows: Sequence[ComparisonRow]) -> str:
    resource_ids = _resource_columns(rows)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(METRICS_HEADER + [f"utilization:{resource_id}" for resource_id in resource_ids])
    for row in rows:
        values = list(row.utilization.values())
        mean_utilization = sum(values, Fraction(0)) / len(values) if values else Fraction(0)
        writer.writerow(
            [row.algorithm, row.makespan, format_ratio(row.mean_wait), row.max_wait, format_ratio(mean_utilization)]
            + [format_ratio(row.utilization.get(resource_id, Fraction(0))) for resource_id in resource_ids]
        )
    return buffer.getvalue()


def format_ratio(value: Fraction) -> str:
    return f"{float(value):.4f}"


def _resource_columns(rows: Sequence[ComparisonRow]) -> List[str]:
    columns: List[str] = []
    for row in rows:
        for resource_id in row.utilization:
            if resource_id not in columns:
                columns.append(resource_id)
    return columns
