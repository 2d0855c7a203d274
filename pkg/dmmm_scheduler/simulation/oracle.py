"""Per-tick reference simulator used to cross-check ``execute``.

It shares no timing code with the event executor: the clock advances one unit
at a time and durations are computed with integer ceiling division.
"""

from __future__ import annotations

from typing import Dict, List

from dmmm_scheduler.errors import EmptyResourceListError, InstanceTooLargeError, PolicyContractError
from dmmm_scheduler.scenario.parameters import id_key
from dmmm_scheduler.simulation.executor import BindingPolicy
from dmmm_scheduler.simulation.metrics import summarize
from dmmm_scheduler.types.model import Assignment, Resource, Scenario, Schedule, Task

MAX_ORACLE_TASKS = 8


def oracle_execute(scenario: Scenario, policy: BindingPolicy, algorithm: str = "custom") -> Schedule:
    if len(scenario.tasks) > MAX_ORACLE_TASKS:
        raise InstanceTooLargeError(
            f"ORACLE ERROR: {len(scenario.tasks)} tasks exceed the oracle limit of {MAX_ORACLE_TASKS}")
    if not scenario.resources:
        raise EmptyResourceListError("SCHEDULING ERROR: scenario declares no resources")

    resources = sorted(scenario.resources, key=lambda resource: id_key(resource.id))
    pending: Dict[str, Task] = {
        task.id: task for task in sorted(scenario.tasks, key=lambda task: id_key(task.id))
    }
    busy_until: Dict[str, int] = {}
    assignments: List[Assignment] = []
    limit = sum(_ceil_duration(task, resource) for task in scenario.tasks for resource in resources)
    tick = 0

    while pending:
        for resource_id in [rid for rid, until in busy_until.items() if until <= tick]:
            del busy_until[resource_id]
        while pending:
            idle = [resource for resource in resources if resource.id not in busy_until]
            if not idle:
                break
            choice = policy.select(pending, idle, tick)
            if choice is None:
                break
            task, resource = choice
            if task.id not in pending or resource.id in busy_until:
                raise PolicyContractError(f"CONTRACT ERROR: invalid binding ({task.id!r}, {resource.id!r})")
            finish = tick + _ceil_duration(task, resource)
            assignments.append(Assignment(task.id, resource.id, tick, finish))
            busy_until[resource.id] = finish
            del pending[task.id]
        if pending and not busy_until:
            raise PolicyContractError(f"CONTRACT ERROR: policy bound nothing at t={tick} while every resource is idle")
        tick += 1
        if tick > limit:
            raise PolicyContractError("CONTRACT ERROR: oracle exceeded its tick limit")

    return summarize(algorithm, [resource.id for resource in resources], assignments)


def _ceil_duration(task: Task, resource: Resource) -> int:
    factor = resource.speed_factor
    return -(-task.execution_time * factor.denominator // factor.numerator)

