from __future__ import annotations

from typing import Iterable, Optional, Sequence

from dmmm_scheduler.decision.matrix import recompute_matrix
from dmmm_scheduler.errors import DanglingReferenceError, DuplicateIdError, NonPositiveValueError, ValidationError
from dmmm_scheduler.types.model import Resource, Scenario, SchedulerConfig, Task, UserProfile


def validate_scenario(
    tasks: Sequence[Task],
    users: Sequence[UserProfile],
    resources: Sequence[Resource],
    scheduler: Optional[SchedulerConfig] = None,
) -> Scenario:
    _check_unique((task.id for task in tasks), "task")
    _check_unique((user.id for user in users), "user")
    _check_unique((resource.id for resource in resources), "resource")

    for user in users:
        if not user.user_type:
            raise ValidationError(f"INTEGRITY ERROR: user {user.id!r} has an empty user_type")
        if user.priority < 1:
            raise NonPositiveValueError(f"VALUE ERROR: non-positive priority {user.priority} for user {user.id!r}")

    user_ids = {user.id for user in users}
    for task in tasks:
        if task.execution_time < 1:
            raise NonPositiveValueError(
                f"VALUE ERROR: non-positive duration {task.execution_time} for task {task.id!r}")
        if task.user_id not in user_ids:
            raise DanglingReferenceError(
                f"INTEGRITY ERROR: task {task.id!r} references unknown user {task.user_id!r}")

    for resource in resources:
        if resource.speed_factor <= 0:
            raise NonPositiveValueError(
                f"VALUE ERROR: non-positive speed_factor {resource.speed_factor} for resource {resource.id!r}")
        if recompute_matrix(resource.matrix) != resource.matrix:
            raise ValidationError(f"INTEGRITY ERROR: resource {resource.id!r} carries inconsistent matrix totals")

    return Scenario(users=tuple(users), tasks=tuple(tasks), resources=tuple(resources), scheduler=scheduler)


def _check_unique(ids: Iterable[str], kind: str) -> None:
    seen = set()
    for identifier in ids:
        if identifier in seen:
            raise DuplicateIdError(f"INTEGRITY ERROR: duplicate {kind} id {identifier!r}")
        seen.add(identifier)
