from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, List, Optional, Sequence

from dmmm_scheduler.errors import EmptyResourceListError
from dmmm_scheduler.scheduling.policies import build_policy
from dmmm_scheduler.simulation.executor import execute
from dmmm_scheduler.simulation.metrics import comparison_row
from dmmm_scheduler.types.model import ComparisonRow, Scenario, Schedule, SchedulerConfig

logger = logging.getLogger(__name__)

Scheduler = Callable[[Scenario, SchedulerConfig], Schedule]


def _run(scenario: Scenario, config: SchedulerConfig, algorithm: str) -> Schedule:
    if not scenario.resources:
        raise EmptyResourceListError(f"SCHEDULING ERROR: {algorithm} needs at least one resource")
    if config.algorithm != algorithm:
        config = SchedulerConfig(algorithm=algorithm, priority_first=config.priority_first)
    schedule = execute(scenario, build_policy(scenario, config), algorithm)
    logger.info("%s scheduled %d task(s), makespan %d", algorithm, len(schedule.assignments), schedule.makespan)
    return schedule


def dmmm_schedule(scenario: Scenario, config: Optional[SchedulerConfig] = None) -> Schedule:
    return _run(scenario, config or SchedulerConfig(), "dmmm")


def min_min_schedule(scenario: Scenario, config: Optional[SchedulerConfig] = None) -> Schedule:
    return _run(scenario, config or SchedulerConfig(), "min-min")


def max_min_schedule(scenario: Scenario, config: Optional[SchedulerConfig] = None) -> Schedule:
    return _run(scenario, config or SchedulerConfig(), "max-min")


def round_robin_schedule(scenario: Scenario, config: Optional[SchedulerConfig] = None) -> Schedule:
    return _run(scenario, config or SchedulerConfig(), "round-robin")


SCHEDULERS: Dict[str, Scheduler] = {
    "dmmm": dmmm_schedule,
    "min-min": min_min_schedule,
    "max-min": max_min_schedule,
    "round-robin": round_robin_schedule,
}


def schedule(scenario: Scenario, config: SchedulerConfig) -> Schedule:
    return SCHEDULERS[config.algorithm](scenario, config)


def compare(
    scenario: Scenario,
    algorithms: Sequence[str],
    priority_first: bool = False,
    workers: int = 1,
) -> List[ComparisonRow]:
    configs = [SchedulerConfig(algorithm=name, priority_first=priority_first) for name in _dedupe(algorithms)]

    def _evaluate(config: SchedulerConfig) -> ComparisonRow:
        return comparison_row(schedule(scenario, config))

    if workers > 1 and len(configs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_evaluate, configs))
    return [_evaluate(config) for config in configs]


def _dedupe(algorithms: Sequence[str]) -> List[str]:
    unique: List[str] = []
    for name in algorithms:
        if name in unique:
            logger.warning("algorithm %r listed more than once; keeping the first occurrence", name)
            continue
        unique.append(name)
    return unique
