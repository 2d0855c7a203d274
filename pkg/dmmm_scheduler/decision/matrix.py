"""Decision matrices: weighted criteria against rated user types.

A cell is ``weight(criterion) * rating(user_type)``; summing a column gives its
total and the largest total is the matrix score used to rank resources. All
arithmetic is integer.
"""

from __future__ import annotations

import logging
from typing import Dict, Iterable, List, Sequence, Tuple, Union

from dmmm_scheduler.errors import (
    DuplicateIdError,
    EmptyMatrixError,
    EmptyResourceListError,
    NonPositiveValueError,
    UnknownUserTypeError,
    ValidationError,
)
from dmmm_scheduler.scenario.parameters import id_key
from dmmm_scheduler.types.model import Criterion, DecisionMatrix, RatedColumn, Resource, UserProfile

logger = logging.getLogger(__name__)

ColumnLike = Union[RatedColumn, Tuple[str, int]]


def build_matrix(criteria: Sequence[Criterion], columns: Sequence[ColumnLike]) -> DecisionMatrix:
    if not criteria:
        raise EmptyMatrixError("MATRIX ERROR: a decision matrix needs at least one criterion")
    if not columns:
        raise EmptyMatrixError("MATRIX ERROR: a decision matrix needs at least one user-type column")
    rated = tuple(_as_column(column) for column in columns)
    _check_unique((criterion.name for criterion in criteria), "criterion")
    _check_unique((column.user_type for column in rated), "user type column")
    for criterion in criteria:
        if criterion.weight < 1:
            raise NonPositiveValueError(f"VALUE ERROR: non-positive weight {criterion.weight} for {criterion.name!r}")
    for column in rated:
        if column.rating < 1:
            raise NonPositiveValueError(f"VALUE ERROR: non-positive rating {column.rating} for {column.user_type!r}")

    cells = tuple(tuple(criterion.weight * column.rating for column in rated) for criterion in criteria)
    totals = tuple(sum(row[index] for row in cells) for index in range(len(rated)))
    return DecisionMatrix(
        criteria=tuple(criteria),
        columns=rated,
        cells=cells,
        column_totals=totals,
        score=max(totals),
    )


def recompute_matrix(matrix: DecisionMatrix) -> DecisionMatrix:
    return build_matrix(matrix.criteria, matrix.columns)


def matrix_from_priorities(criteria: Sequence[Criterion], users: Iterable[UserProfile]) -> DecisionMatrix:
    """One column per user type, rated by that type's priority."""
    priorities: Dict[str, int] = {}
    for user in users:
        known = priorities.setdefault(user.user_type, user.priority)
        if known != user.priority:
            raise ValidationError(
                f"INTEGRITY ERROR: user type {user.user_type!r} carries priorities {known} and {user.priority}")
    if not priorities:
        raise EmptyMatrixError("MATRIX ERROR: no user types available to derive matrix columns")
    order = list(priorities)
    ranked = sorted(order, key=lambda user_type: (-priorities[user_type], order.index(user_type)))
    return build_matrix(criteria, [RatedColumn(user_type, priorities[user_type]) for user_type in ranked])


def column_total(matrix: DecisionMatrix, user_type: str) -> int:
    for index, column in enumerate(matrix.columns):
        if column.user_type == user_type:
            return sum(row[index] for row in matrix.cells)
    raise UnknownUserTypeError(f"MATRIX ERROR: unknown user type {user_type!r}")


def matrix_score(matrix: DecisionMatrix) -> int:
    return max(matrix.column_totals)


def best_user_type(matrix: DecisionMatrix) -> str:
    # ties: higher rating, then earlier declaration
    index = max(
        range(len(matrix.columns)),
        key=lambda i: (matrix.column_totals[i], matrix.columns[i].rating, -i),
    )
    return matrix.columns[index].user_type


def rank_resources(resources: Sequence[Resource]) -> List[str]:
    if not resources:
        raise EmptyResourceListError("SCHEDULING ERROR: cannot rank an empty resource list")
    ranked = sorted(resources, key=lambda resource: (-matrix_score(resource.matrix), id_key(resource.id)))
    logger.debug("ranked resources %s", [resource.id for resource in ranked])
    return [resource.id for resource in ranked]


def _as_column(column: ColumnLike) -> RatedColumn:
    if isinstance(column, RatedColumn):
        return column
    user_type, rating = column
    return RatedColumn(user_type, rating)


def _check_unique(names: Iterable[str], kind: str) -> None:
    seen = set()
    for name in names:
        if name in seen:
            raise DuplicateIdError(f"INTEGRITY ERROR: duplicate {kind} {name!r}")
        seen.add(name)
