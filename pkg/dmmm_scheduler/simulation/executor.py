"""Event-driven executor turning a binding policy into a timed schedule."""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Protocol, Sequence, Set, Tuple

from dmmm_scheduler.errors import EmptyResourceListError, PolicyContractError
from dmmm_scheduler.scenario.parameters import id_key
from dmmm_scheduler.simulation.events import EventQueue
from dmmm_scheduler.simulation.metrics import summarize
from dmmm_scheduler.types.model import Assignment, Resource, Scenario, Schedule, Task

logger = logging.getLogger(__name__)

Binding = Tuple[Task, Resource]


class BindingPolicy(Protocol):
    """Deterministic rule choosing the next (task, resource) pair, or ``None`` to wait for the next event."""

    def select(self, pending: Mapping[str, Task], available: Sequence[Resource], clock: int) -> Optional[Binding]:
        ...


def effective_duration(execution_time: int, speed_factor: Fraction) -> int:
    return math.ceil(Fraction(execution_time) / speed_factor)


def ordered_tasks(scenario: Scenario) -> Dict[str, Task]:
    return {task.id: task for task in sorted(scenario.tasks, key=lambda task: id_key(task.id))}


def ordered_resources(scenario: Scenario) -> List[Resource]:
    if not scenario.resources:
        raise EmptyResourceListError("SCHEDULING ERROR: scenario declares no resources")
    return sorted(scenario.resources, key=lambda resource: id_key(resource.id))


def execute(scenario: Scenario, policy: BindingPolicy, algorithm: str = "custom") -> Schedule:
    resources = ordered_resources(scenario)
    pending = ordered_tasks(scenario)
    free: Set[str] = {resource.id for resource in resources}
    queue = EventQueue()
    assignments: List[Assignment] = []
    clock = 0

    while pending:
        while free and pending:
            available = [resource for resource in resources if resource.id in free]
            binding = policy.select(pending, available, clock)
            if binding is None:
                break
            task, resource = binding
            _check_binding(task, resource, pending, free)
            finish = clock + effective_duration(task.execution_time, resource.speed_factor)
            assignments.append(Assignment(task.id, resource.id, clock, finish))
            logger.debug("bound %s to %s over [%d, %d)", task.id, resource.id, clock, finish)
            del pending[task.id]
            free.discard(resource.id)
            queue.push(finish, resource.id)
        if not pending:
            break
        if not queue:
            raise PolicyContractError(
                f"CONTRACT ERROR: policy bound nothing at t={clock} while every resource is idle")
        clock, released = queue.pop_due()
        free.update(released)
        logger.debug("clock advanced to %d, released %s", clock, released)

    return summarize(algorithm, [resource.id for resource in resources], assignments)


def _check_binding(task: Task, resource: Resource, pending: Mapping[str, Task], free: Set[str]) -> None:
    if task.id not in pending:
        raise PolicyContractError(f"CONTRACT ERROR: policy returned non-pending task {task.id!r}")
    if resource.id not in free:
        raise PolicyContractError(f"CONTRACT ERROR: policy returned busy resource {resource.id!r}")
