"""Binding policies: which pending task goes to which free resource next.

Every policy is a pure function of (pending tasks, free resources, clock)
given the scenario it was built for, so the event executor and the per-tick
oracle observe identical choices.
"""

from __future__ import annotations

from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from dmmm_scheduler.decision.matrix import matrix_score
from dmmm_scheduler.scenario.parameters import IdKey, id_key
from dmmm_scheduler.simulation.executor import Binding, effective_duration
from dmmm_scheduler.types.model import Resource, Scenario, SchedulerConfig, Task

SortKey = Tuple[Union[int, IdKey], ...]


class SelectionPolicy:
    """Orders tasks by duration, optionally behind owner priority."""

    longest_first = False

    def __init__(self, scenario: Scenario, config: SchedulerConfig) -> None:
        self.config = config
        self.priorities: Dict[str, int] = {user.id: user.priority for user in scenario.users}
        self.order: List[Task] = sorted(scenario.tasks, key=self.task_key)

    def task_key(self, task: Task) -> SortKey:
        duration = -task.execution_time if self.longest_first else task.execution_time
        key: SortKey = (duration, id_key(task.id))
        if self.config.priority_first:
            return (-self.priorities[task.user_id],) + key
        return key

    def next_task(self, pending: Mapping[str, Task]) -> Optional[Task]:
        for task in self.order:
            if task.id in pending:
                return task
        return None


class DealtPolicy:
    """Each resource serves a hand of tasks fixed up front, in hand order."""

    hands: Dict[str, List[Task]]

    def select(self, pending: Mapping[str, Task], available: Sequence[Resource], clock: int) -> Optional[Binding]:
        for resource in available:
            for task in self.hands.get(resource.id, []):
                if task.id in pending:
                    return task, resource
        return None


class DmmmPolicy(SelectionPolicy):
    """Highest-scoring free resource takes the shortest pending task."""

    def __init__(self, scenario: Scenario, config: SchedulerConfig) -> None:
        super().__init__(scenario, config)
        self.scores: Dict[str, int] = {resource.id: matrix_score(resource.matrix) for resource in scenario.resources}

    def select(self, pending: Mapping[str, Task], available: Sequence[Resource], clock: int) -> Optional[Binding]:
        if not available:
            return None
        task = self.next_task(pending)
        if task is None:
            return None
        resource = min(available, key=lambda resource: (-self.scores[resource.id], id_key(resource.id)))
        return task, resource


class MinMinPolicy(SelectionPolicy, DealtPolicy):
    """Shortest task first, committed to the resource completing it earliest.

    Completion counts the resource's queued work, so a task may wait for a
    fast resource rather than start at once on a slow one.
    """

    def __init__(self, scenario: Scenario, config: SchedulerConfig) -> None:
        super().__init__(scenario, config)
        self.hands = earliest_completion_hands(self.order, scenario.resources)


class MaxMinPolicy(MinMinPolicy):
    longest_first = True


class RoundRobinPolicy(DealtPolicy):
    """Tasks are dealt cyclically to resources up front."""

    def __init__(self, scenario: Scenario, config: SchedulerConfig) -> None:
        priorities = {user.id: user.priority for user in scenario.users}

        def deal_key(task: Task) -> SortKey:
            if config.priority_first:
                return (-priorities[task.user_id], id_key(task.id))
            return (id_key(task.id),)

        resources = sorted(scenario.resources, key=lambda resource: id_key(resource.id))
        self.hands = {resource.id: [] for resource in resources}
        for index, task in enumerate(sorted(scenario.tasks, key=deal_key)):
            self.hands[resources[index % len(resources)].id].append(task)


def earliest_completion_hands(order: Sequence[Task], resources: Sequence[Resource]) -> Dict[str, List[Task]]:
    """Commit tasks in ``order``, each to the resource with the least ready time plus effective duration."""
    ready: Dict[str, int] = {resource.id: 0 for resource in resources}
    hands: Dict[str, List[Task]] = {resource.id: [] for resource in resources}
    if not resources:
        return hands
    for task in order:
        resource = min(
            resources,
            key=lambda resource: (
                ready[resource.id] + effective_duration(task.execution_time, resource.speed_factor),
                id_key(resource.id),
            ),
        )
        ready[resource.id] += effective_duration(task.execution_time, resource.speed_factor)
        hands[resource.id].append(task)
    return hands


POLICIES = {
    "dmmm": DmmmPolicy,
    "min-min": MinMinPolicy,
    "max-min": MaxMinPolicy,
    "round-robin": RoundRobinPolicy,
}


def build_policy(scenario: Scenario, config: SchedulerConfig) -> Union[DmmmPolicy, DealtPolicy]:
    return POLICIES[config.algorithm](scenario, config)
