from __future__ import annotations

from pathlib import Path

import pytest

from dmmm_scheduler.errors import ScenarioParseError
from dmmm_scheduler.monitoring.report import build_report
from dmmm_scheduler.monitoring.store import ingest_usage
from dmmm_scheduler.monitoring.usage_io import (
    parse_usage_csv,
    read_usage_csv,
    report_to_document,
    users_to_document,
    write_usage_csv,
)
from dmmm_scheduler.types.model import UsageRecord, UserProfile

CSV = "customer_id,resource_id,bucket_start,amount\nc1,r1,0,60\nc1,r1,1,5\nc2,r1,0,12\n"


def test_parse_usage_csv() -> None:
    assert parse_usage_csv(CSV) == [
        UsageRecord("c1", "r1", 0, 60),
        UsageRecord("c1", "r1", 1, 5),
        UsageRecord("c2", "r1", 0, 12),
    ]


def test_write_usage_csv_matches_input() -> None:
    assert write_usage_csv(parse_usage_csv(CSV)) == CSV


def test_empty_file_means_no_records(tmp_path: Path) -> None:
    path = tmp_path / "usage.csv"
    path.write_text("", encoding="utf-8")

    assert read_usage_csv(str(path)) == []


@pytest.mark.parametrize(
    "text",
    [
        "customer,resource,bucket,amount\nc1,r1,0,1\n",
        "customer_id,resource_id,bucket_start,amount\nc1,r1,0\n",
        "customer_id,resource_id,bucket_start,amount\nc1,r1,zero,1\n",
    ],
)
def test_malformed_csv(text: str) -> None:
    with pytest.raises(ScenarioParseError):
        parse_usage_csv(text)


def test_missing_usage_file(tmp_path: Path) -> None:
    with pytest.raises(ScenarioParseError):
        read_usage_csv(str(tmp_path / "missing.csv"))


def test_report_document() -> None:
    report = build_report(ingest_usage(parse_usage_csv(CSV)), 50, 10)

    document = report_to_document(report)

    assert document["horizon"] == 2
    assert document["thresholds"] == {"peak": 50, "dormant": 10}
    assert document["customers"][0] == {
        "customer_id": "c1",
        "total": 65,
        "resources": {"r1": 65},
        "dominant_resource": "r1",
        "peak_windows": [[0, 1]],
        "dormant_windows": [[1, 2]],
    }
    assert document["customers"][1]["dormant_windows"] == [[1, 2]]
    assert document["provider"] == {"peak_windows": [], "dormant_windows": [[1, 2]]}


def test_users_document() -> None:
    assert users_to_document([UserProfile("c1", "casual", 2)]) == [
        {"id": "c1", "user_type": "casual", "priority": 2}
    ]
