"""Unit tests for customer classification and rule loading."""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from dmmm_scheduler.errors import InvalidRuleError, MissingKeyError, ScenarioParseError
from dmmm_scheduler.monitoring.classify import DEFAULT_RULE, classify_users, load_rule, rule_from_document
from dmmm_scheduler.monitoring.report import build_report
from dmmm_scheduler.monitoring.store import ingest_usage
from dmmm_scheduler.types.model import ClassificationBand, ClassificationRule, UsageRecord, UserProfile


def _report(totals):
    records = [UsageRecord(customer_id, "r1", 0, total) for customer_id, total in totals.items()]
    return build_report(ingest_usage(records), 50, 10)


def test_quartile_classification() -> None:
    users = classify_users(_report({"c1": 40, "c2": 30, "c3": 20, "c4": 10}))

    assert users == [
        UserProfile("c1", "benefited", 4),
        UserProfile("c2", "important", 3),
        UserProfile("c3", "casual", 2),
        UserProfile("c4", "lesser-privileged", 1),
    ]


def test_heaviest_user_ranks_highest_regardless_of_id() -> None:
    users = classify_users(_report({"c1": 1, "c2": 99}))

    assert [(user.id, user.priority) for user in users] == [("c1", 1), ("c2", 4)]


def test_single_customer_is_top_band() -> None:
    assert classify_users(_report({"solo": 3})) == [UserProfile("solo", "benefited", 4)]


def test_ties_rank_by_customer_id() -> None:
    users = classify_users(_report({"c2": 5, "c1": 5}))

    assert [(user.id, user.priority) for user in users] == [("c1", 4), ("c2", 1)]


def test_empty_report_classifies_nobody() -> None:
    assert classify_users(_report({})) == []


def test_custom_rule() -> None:
    rule = ClassificationRule((
        ClassificationBand("gold", 2, Fraction(1, 2)),
        ClassificationBand("bronze", 1, Fraction(0)),
    ))

    users = classify_users(_report({"c1": 3, "c2": 2, "c3": 1}), rule)

    assert [user.user_type for user in users] == ["gold", "gold", "bronze"]


@pytest.mark.parametrize(
    "bands",
    [
        (),
        (ClassificationBand("a", 2, Fraction(1, 2)), ClassificationBand("b", 2, Fraction(0))),
        (ClassificationBand("a", 2, Fraction(0)), ClassificationBand("b", 1, Fraction(1, 2))),
        (ClassificationBand("a", 2, Fraction(3, 2)), ClassificationBand("b", 1, Fraction(0))),
        (ClassificationBand("a", 2, Fraction(1, 2)), ClassificationBand("b", 1, Fraction(1, 4))),
        (ClassificationBand("", 1, Fraction(0)),),
    ],
)
def test_rule_invariants(bands) -> None:
    with pytest.raises(InvalidRuleError):
        ClassificationRule(bands)


def test_default_rule_bands() -> None:
    assert [(band.user_type, band.priority, band.lower_bound) for band in DEFAULT_RULE.bands] == [
        ("benefited", 4, Fraction(3, 4)),
        ("important", 3, Fraction(1, 2)),
        ("casual", 2, Fraction(1, 4)),
        ("lesser-privileged", 1, Fraction(0)),
    ]


def test_rule_from_document() -> None:
    rule = rule_from_document({"bands": [
        {"user_type": "gold", "priority": 2, "lower_bound": "1/2"},
        {"user_type": "bronze", "priority": 1, "lower_bound": 0},
    ]})

    assert rule.bands[0].lower_bound == Fraction(1, 2)


def test_rule_from_document_errors() -> None:
    with pytest.raises(MissingKeyError):
        rule_from_document({})
    with pytest.raises(InvalidRuleError):
        rule_from_document({"bands": [{"user_type": "x", "priority": 1, "lower_bound": "half"}]})


def test_load_rule_from_yaml(tmp_path: Path) -> None:
    path = tmp_path / "rule.yml"
    path.write_text(
        "bands:\n"
        "  - {user_type: gold, priority: 2, lower_bound: 0.5}\n"
        "  - {user_type: bronze, priority: 1, lower_bound: 0}\n",
        encoding="utf-8",
    )

    rule = load_rule(str(path))

    assert [band.user_type for band in rule.bands] == ["gold", "bronze"]
    assert rule.bands[0].lower_bound == Fraction(1, 2)


def test_load_rule_errors(tmp_path: Path) -> None:
    with pytest.raises(ScenarioParseError):
        load_rule(str(tmp_path / "absent.yml"))
    broken = tmp_path / "broken.yml"
    broken.write_text("bands: [", encoding="utf-8")
    with pytest.raises(ScenarioParseError):
        load_rule(str(broken))


def test_roster_customers_without_usage_rank_last() -> None:
    users = classify_users(_report({"c1": 10, "c2": 5}), roster=["c1", "c2", "c3"])

    assert users == [
        UserProfile("c1", "benefited", 4),
        UserProfile("c2", "important", 3),
        UserProfile("c3", "lesser-privileged", 1),
    ]


@pytest.mark.property
@settings(max_examples=100, deadline=None)
@given(
    amounts=st.lists(st.integers(min_value=0, max_value=500), min_size=1, max_size=12),
    factor=st.integers(min_value=2, max_value=10),
)
def test_scaling_usage_keeps_classification(amounts, factor) -> None:
    totals = {f"c{index}": amount for index, amount in enumerate(amounts, start=1)}

    before = classify_users(_report(totals))
    after = classify_users(_report({customer_id: amount * factor for customer_id, amount in totals.items()}))

    assert after == before
