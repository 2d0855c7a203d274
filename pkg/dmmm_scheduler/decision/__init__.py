from dmmm_scheduler.decision.matrix import (
    best_user_type,
    build_matrix,
    column_total,
    matrix_from_priorities,
    matrix_score,
    rank_resources,
    recompute_matrix,
)

__all__ = [
    "best_user_type",
    "build_matrix",
    "column_total",
    "matrix_from_priorities",
    "matrix_score",
    "rank_resources",
    "recompute_matrix",
]
