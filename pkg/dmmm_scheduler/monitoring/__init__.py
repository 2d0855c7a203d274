from dmmm_scheduler.monitoring.classify import DEFAULT_RULE, classify_users, load_rule, rule_from_document
from dmmm_scheduler.monitoring.report import build_report
from dmmm_scheduler.monitoring.store import UsageStore, ingest_usage, usage_series
from dmmm_scheduler.monitoring.synthesis import PROFILES, synthesize_usage
from dmmm_scheduler.monitoring.windows import check_thresholds, dormant_windows, peak_windows

__all__ = [
    "DEFAULT_RULE",
    "PROFILES",
    "UsageStore",
    "build_report",
    "check_thresholds",
    "classify_users",
    "dormant_windows",
    "ingest_usage",
    "load_rule",
    "peak_windows",
    "rule_from_document",
    "synthesize_usage",
    "usage_series",
]
