"""Provider-facing usage report: totals, dominant resources and peak/dormant windows."""

from __future__ import annotations

import logging
from typing import Dict, List

from dmmm_scheduler.monitoring.store import UsageStore
from dmmm_scheduler.monitoring.windows import check_thresholds, dormant_windows, peak_windows, scan_windows
from dmmm_scheduler.scenario.parameters import id_key
from dmmm_scheduler.types.model import CustomerWindow, UsageReport

logger = logging.getLogger(__name__)


def build_report(store: UsageStore, peak_threshold: int, dormant_threshold: int) -> UsageReport:
    check_thresholds(peak_threshold, dormant_threshold)
    customers = store.customers()
    totals: Dict[str, int] = {}
    resource_totals: Dict[str, Dict[str, int]] = {}
    dominant: Dict[str, str] = {}
    peaks: List[CustomerWindow] = []
    dormant: List[CustomerWindow] = []

    for customer_id in customers:
        totals[customer_id] = store.customer_total(customer_id)
        per_resource = store.resource_totals(customer_id)
        resource_totals[customer_id] = per_resource
        # ties: natural resource id order
        dominant[customer_id] = min(per_resource, key=lambda rid: (-per_resource[rid], id_key(rid)))
        peaks.extend((customer_id, start, end) for start, end in peak_windows(store, customer_id, peak_threshold))
        dormant.extend(
            (customer_id, start, end) for start, end in dormant_windows(store, customer_id, dormant_threshold))

    provider_totals = store.provider_bucket_totals()
    scale = max(len(customers), 1)
    report = UsageReport(
        horizon=store.horizon,
        peak_threshold=peak_threshold,
        dormant_threshold=dormant_threshold,
        customer_totals=totals,
        resource_totals=resource_totals,
        peak_windows=tuple(peaks),
        dormant_windows=tuple(dormant),
        dominant_resources=dominant,
        provider_peak_windows=tuple(scan_windows(provider_totals, lambda total: total >= peak_threshold * scale)),
        provider_dormant_windows=tuple(
            scan_windows(provider_totals, lambda total: total <= dormant_threshold * scale)),
    )
    logger.info("usage report covers %d customer(s) over %d bucket(s)", len(customers), store.horizon)
    return report
