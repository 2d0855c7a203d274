"""Usage CSV input/output and JSON-ready report documents."""

from __future__ import annotations

import csv
import io
from typing import Any, Dict, Iterable, List, Sequence

from dmmm_scheduler.errors import ScenarioParseError
from dmmm_scheduler.types.model import UsageRecord, UsageReport, UserProfile

USAGE_HEADER = ["customer_id", "resource_id", "bucket_start", "amount"]


def parse_usage_csv(text: str) -> List[UsageRecord]:
    if not text.strip():
        return []
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if header != USAGE_HEADER:
        raise ScenarioParseError(
            f"PARSE ERROR: usage CSV header must be {','.join(USAGE_HEADER)}, got {','.join(header)}")
    records: List[UsageRecord] = []
    for line_number, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != len(USAGE_HEADER):
            raise ScenarioParseError(f"PARSE ERROR: usage CSV line {line_number} has {len(row)} fields")
        customer_id, resource_id, bucket_start, amount = row
        try:
            records.append(UsageRecord(customer_id, resource_id, int(bucket_start), int(amount)))
        except ValueError as exc:
            raise ScenarioParseError(f"PARSE ERROR: usage CSV line {line_number}: {exc}") from exc
    return records


def read_usage_csv(path: str) -> List[UsageRecord]:
    try:
        with open(path, encoding="utf-8", newline="") as fh:
            return parse_usage_csv(fh.read())
    except (OSError, UnicodeDecodeError) as exc:
        raise ScenarioParseError(f"PARSE ERROR: unable to read {path}: {exc}") from exc


def write_usage_csv(records: Iterable[UsageRecord]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(USAGE_HEADER)
    for record in records:
        writer.writerow([record.customer_id, record.resource_id, record.bucket_start, record.amount])
    return buffer.getvalue()


def report_to_document(report: UsageReport) -> Dict[str, Any]:
    customers = []
    for customer_id, total in report.customer_totals.items():
        customers.append({
            "customer_id": customer_id,
            "total": total,
            "resources": dict(report.resource_totals.get(customer_id, {})),
            "dominant_resource": report.dominant_resources.get(customer_id),
            "peak_windows": [[start, end] for owner, start, end in report.peak_windows if owner == customer_id],
            "dormant_windows": [[start, end] for owner, start, end in report.dormant_windows if owner == customer_id],
        })
    return {
        "horizon": report.horizon,
        "thresholds": {"peak": report.peak_threshold, "dormant": report.dormant_threshold},
        "customers": customers,
        "provider": {
            "peak_windows": [list(window) for window in report.provider_peak_windows],
            "dormant_windows": [list(window) for window in report.provider_dormant_windows],
        },
    }


def users_to_document(users: Sequence[UserProfile]) -> List[Dict[str, Any]]:
    return [{"id": user.id, "user_type": user.user_type, "priority": user.priority} for user in users]
