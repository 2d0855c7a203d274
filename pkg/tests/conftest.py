"""Shared pytest fixtures: the worked-example scenario and seeded random scenarios."""

from __future__ import annotations

import random
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Dict, List, Sequence

import pytest

# Ensure project root is importable when running pytest directly.
PROJECT_ROOT = Path(__file__).resolve().parent.parent
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

from dmmm_scheduler.decision.matrix import build_matrix  # noqa: E402
from dmmm_scheduler.scenario.serialization import read_document, scenario_from_document  # noqa: E402
from dmmm_scheduler.scenario.validation import validate_scenario  # noqa: E402
from dmmm_scheduler.types.model import (  # noqa: E402
    Criterion,
    DecisionMatrix,
    Resource,
    Scenario,
    Task,
    UserProfile,
)

DEMO_SCENARIO = PROJECT_ROOT / "dmmm_scheduler" / "demo" / "scenario.json"
DEMO_DURATIONS = {"t1": 15, "t2": 20, "t3": 10, "t4": 5}
SPEEDS = (Fraction(1), Fraction(2), Fraction(1, 2), Fraction(3, 2))


def make_matrix(weights: Sequence[int], ratings: Sequence[int]) -> DecisionMatrix:
    criteria = [Criterion(f"k{index}", weight) for index, weight in enumerate(weights, start=1)]
    columns = [(f"type{index}", rating) for index, rating in enumerate(ratings, start=1)]
    return build_matrix(criteria, columns)


def make_scenario(
    durations: Dict[str, int],
    matrices: Dict[str, DecisionMatrix],
    priorities: Dict[str, int] | None = None,
) -> Scenario:
    """One owner per task (``c<n>`` for ``t<n>``), priorities default to 1."""
    priorities = priorities or {}
    users = [
        UserProfile(f"c{task_id[1:]}", f"tier{priorities.get(task_id, 1)}", priorities.get(task_id, 1))
        for task_id in durations
    ]
    tasks = [Task(task_id, f"c{task_id[1:]}", duration) for task_id, duration in durations.items()]
    resources = [Resource(resource_id, matrix) for resource_id, matrix in matrices.items()]
    return validate_scenario(tasks, users, resources)


@pytest.fixture
def demo_document() -> Dict[str, Any]:
    return read_document(str(DEMO_SCENARIO))


@pytest.fixture
def demo_scenario(demo_document: Dict[str, Any]) -> Scenario:
    return scenario_from_document(demo_document)


@pytest.fixture
def identical_scenario() -> Scenario:
    matrix = make_matrix([1, 2, 3], [4, 3, 2, 1])
    return make_scenario(DEMO_DURATIONS, {"r1": matrix, "r2": matrix, "r3": matrix})


@pytest.fixture(scope="session")
def random_scenario() -> Callable[..., Scenario]:
    def _make(
        seed: int,
        max_tasks: int = 5,
        max_resources: int = 3,
        max_duration: int = 6,
        identical: bool = False,
        speeds: bool = False,
    ) -> Scenario:
        rng = random.Random(seed)
        users = [
            UserProfile(f"u{index}", f"tier{priority}", priority)
            for index, priority in enumerate((rng.randint(1, 4) for _ in range(rng.randint(1, 4))), start=1)
        ]
        tasks = [
            Task(f"t{index}", rng.choice(users).id, rng.randint(1, max_duration))
            for index in range(1, rng.randint(1, max_tasks) + 1)
        ]

        def _matrix() -> DecisionMatrix:
            weights = [rng.randint(1, 5) for _ in range(rng.randint(1, 3))]
            ratings = [rng.randint(1, 5) for _ in range(rng.randint(1, 3))]
            return make_matrix(weights, ratings)

        shared = _matrix()
        resources: List[Resource] = [
            Resource(
                f"r{index}",
                shared if identical else _matrix(),
                rng.choice(SPEEDS) if speeds else Fraction(1),
            )
            for index in range(1, rng.randint(1, max_resources) + 1)
        ]
        return validate_scenario(tasks, users, resources)

    return _make


@pytest.fixture(scope="session")
def matrix_factory() -> Callable[[Sequence[int], Sequence[int]], DecisionMatrix]:
    return make_matrix


@pytest.fixture(scope="session")
def scenario_factory() -> Callable[..., Scenario]:
    return make_scenario
