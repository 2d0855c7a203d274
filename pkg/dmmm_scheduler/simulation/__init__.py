from dmmm_scheduler.simulation.events import EventQueue
from dmmm_scheduler.simulation.executor import BindingPolicy, effective_duration, execute
from dmmm_scheduler.simulation.metrics import comparison_row, metrics, summarize
from dmmm_scheduler.simulation.oracle import oracle_execute

__all__ = [
    "BindingPolicy",
    "EventQueue",
    "comparison_row",
    "effective_duration",
    "execute",
    "metrics",
    "oracle_execute",
    "summarize",
]
