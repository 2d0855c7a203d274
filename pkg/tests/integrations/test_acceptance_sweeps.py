"""Seeded sweeps over generated scenarios plus a large-instance smoke run."""

from __future__ import annotations

import time
from fractions import Fraction

import pytest

from dmmm_scheduler.scheduling import dmmm_schedule, min_min_schedule
from dmmm_scheduler.scheduling.policies import build_policy
from dmmm_scheduler.scenario.validation import validate_scenario
from dmmm_scheduler.simulation.executor import effective_duration, execute
from dmmm_scheduler.simulation.oracle import oracle_execute
from dmmm_scheduler.types.model import ALGORITHMS, Resource, Scenario, Schedule, SchedulerConfig, Task, UserProfile

pytestmark = pytest.mark.integration


def assert_schedule_invariants(result: Schedule, scenario: Scenario) -> None:
    tasks = {task.id: task for task in scenario.tasks}
    resources = {resource.id: resource for resource in scenario.resources}
    assert sorted(a.task_id for a in result.assignments) == sorted(tasks)
    for assignment in result.assignments:
        expected = effective_duration(tasks[assignment.task_id].execution_time,
                                      resources[assignment.resource_id].speed_factor)
        assert assignment.finish == assignment.start + expected
    for resource_id in resources:
        spans = sorted((a.start, a.finish) for a in result.assignments if a.resource_id == resource_id)
        assert all(left[1] <= right[0] for left, right in zip(spans, spans[1:]))
    assert result.makespan == max((a.finish for a in result.assignments), default=0)


@pytest.mark.parametrize("algorithm", ALGORITHMS)
def test_oracle_sweep(random_scenario, algorithm: str) -> None:
    for seed in range(1, 501):
        scenario = random_scenario(seed)
        config = SchedulerConfig(algorithm=algorithm)

        expected = execute(scenario, build_policy(scenario, config), algorithm)

        assert oracle_execute(scenario, build_policy(scenario, config), algorithm) == expected, f"seed {seed}"
        assert_schedule_invariants(expected, scenario)


def test_dmmm_min_min_agreement_sweep(random_scenario) -> None:
    for seed in range(1, 101):
        scenario = random_scenario(seed, max_tasks=8, max_resources=4, identical=True)

        dmmm = dmmm_schedule(scenario)
        min_min = min_min_schedule(scenario)

        assert [a.task_id for a in dmmm.assignments] == [a.task_id for a in min_min.assignments], f"seed {seed}"


def test_priority_first_sweep(random_scenario) -> None:
    config = SchedulerConfig(priority_first=True)
    for seed in range(1, 101):
        scenario = random_scenario(seed, max_tasks=8, max_resources=3)
        priority = {user.id: user.priority for user in scenario.users}
        owner = {task.id: task.user_id for task in scenario.tasks}

        bound = [priority[owner[a.task_id]] for a in dmmm_schedule(scenario, config).assignments]

        assert bound == sorted(bound, reverse=True), f"seed {seed}"


def test_thousand_tasks_on_hundred_resources(matrix_factory) -> None:
    users = [UserProfile(f"c{index}", "casual", 1 + index % 4) for index in range(1, 11)]
    tasks = [Task(f"t{index}", f"c{1 + index % 10}", 1 + (index * 7) % 50) for index in range(1, 1001)]
    resources = [
        Resource(f"r{index}", matrix_factory([1 + index % 3, 2], [1 + index % 5, 3]), Fraction(1 + index % 2))
        for index in range(1, 101)
    ]
    scenario = validate_scenario(tasks, users, resources)

    started = time.perf_counter()
    result = dmmm_schedule(scenario)
    elapsed = time.perf_counter() - started

    assert_schedule_invariants(result, scenario)
    assert elapsed < 1.0
