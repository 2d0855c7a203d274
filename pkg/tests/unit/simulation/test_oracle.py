"""Cross-checks between the event executor and the per-tick oracle."""

from __future__ import annotations

import dataclasses

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from dmmm_scheduler.errors import EmptyResourceListError, InstanceTooLargeError
from dmmm_scheduler.scheduling.policies import build_policy
from dmmm_scheduler.simulation.executor import execute
from dmmm_scheduler.simulation.oracle import MAX_ORACLE_TASKS, oracle_execute
from dmmm_scheduler.types.model import ALGORITHMS, SchedulerConfig, Task


@pytest.mark.parametrize("algorithm", ALGORITHMS)
def test_oracle_matches_executor_on_worked_example(demo_scenario, algorithm: str) -> None:
    config = SchedulerConfig(algorithm=algorithm)

    expected = execute(demo_scenario, build_policy(demo_scenario, config), algorithm)
    actual = oracle_execute(demo_scenario, build_policy(demo_scenario, config), algorithm)

    assert actual == expected


def test_oracle_guard(demo_scenario) -> None:
    tasks = tuple(Task(f"t{index}", "c1", 1) for index in range(1, MAX_ORACLE_TASKS + 2))
    scenario = dataclasses.replace(demo_scenario, tasks=tasks)

    with pytest.raises(InstanceTooLargeError):
        oracle_execute(scenario, build_policy(scenario, SchedulerConfig()))


def test_oracle_needs_resources(demo_scenario) -> None:
    scenario = dataclasses.replace(demo_scenario, resources=())

    with pytest.raises(EmptyResourceListError):
        oracle_execute(scenario, build_policy(demo_scenario, SchedulerConfig()))


@pytest.mark.property
@settings(max_examples=100, deadline=None)
@given(
    seed=st.integers(min_value=1, max_value=10_000),
    algorithm=st.sampled_from(ALGORITHMS),
    priority_first=st.booleans(),
)
def test_oracle_equivalence_with_speed_factors(random_scenario, seed, algorithm, priority_first) -> None:
    scenario = random_scenario(seed, max_tasks=6, speeds=True)
    config = SchedulerConfig(algorithm=algorithm, priority_first=priority_first)

    expected = execute(scenario, build_policy(scenario, config), algorithm)
    actual = oracle_execute(scenario, build_policy(scenario, config), algorithm)

    assert actual == expected
