"""Peak and dormant windows: maximal runs of qualifying buckets, half-open ``[start, end)``."""

from __future__ import annotations

from typing import Callable, List, Sequence

from dmmm_scheduler.errors import NonPositiveValueError, ThresholdOrderError
from dmmm_scheduler.monitoring.store import UsageStore
from dmmm_scheduler.types.model import Window


def scan_windows(totals: Sequence[int], qualifies: Callable[[int], bool]) -> List[Window]:
    windows: List[Window] = []
    start = None
    for bucket, total in enumerate(totals):
        if qualifies(total):
            if start is None:
                start = bucket
        elif start is not None:
            windows.append((start, bucket))
            start = None
    if start is not None:
        windows.append((start, len(totals)))
    return windows


def peak_windows(store: UsageStore, customer_id: str, threshold: int) -> List[Window]:
    if threshold <= 0:
        raise NonPositiveValueError(f"VALUE ERROR: non-positive peak threshold {threshold}")
    return scan_windows(store.bucket_totals(customer_id), lambda total: total >= threshold)


def dormant_windows(store: UsageStore, customer_id: str, threshold: int) -> List[Window]:
    return scan_windows(store.bucket_totals(customer_id), lambda total: total <= threshold)


def check_thresholds(peak_threshold: int, dormant_threshold: int) -> None:
    if peak_threshold <= 0:
        raise NonPositiveValueError(f"VALUE ERROR: non-positive peak threshold {peak_threshold}")
    if dormant_threshold >= peak_threshold:
        raise ThresholdOrderError(
            f"THRESHOLD ERROR: dormant threshold {dormant_threshold} must be below peak threshold {peak_threshold}")
