from dmmm_scheduler.scheduling.policies import (
    DmmmPolicy,
    MaxMinPolicy,
    MinMinPolicy,
    RoundRobinPolicy,
    build_policy,
)
from dmmm_scheduler.scheduling.schedulers import (
    compare,
    dmmm_schedule,
    max_min_schedule,
    min_min_schedule,
    round_robin_schedule,
    schedule,
)

__all__ = [
    "DmmmPolicy",
    "MaxMinPolicy",
    "MinMinPolicy",
    "RoundRobinPolicy",
    "build_policy",
    "compare",
    "dmmm_schedule",
    "max_min_schedule",
    "min_min_schedule",
    "round_robin_schedule",
    "schedule",
]
