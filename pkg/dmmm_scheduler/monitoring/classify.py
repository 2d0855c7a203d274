"""Rank-quantile classification of customers into prioritized user types."""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

import yaml

from dmmm_scheduler.errors import InvalidRuleError, ScenarioParseError
from dmmm_scheduler.scenario.parameters import id_key, positive_int
from dmmm_scheduler.scenario.schema import map_to_schema
from dmmm_scheduler.types.model import ClassificationBand, ClassificationRule, UsageReport, UserProfile

logger = logging.getLogger(__name__)

DEFAULT_RULE = ClassificationRule(
    bands=(
        ClassificationBand("benefited", 4, Fraction(3, 4)),
        ClassificationBand("important", 3, Fraction(1, 2)),
        ClassificationBand("casual", 2, Fraction(1, 4)),
        ClassificationBand("lesser-privileged", 1, Fraction(0)),
    )
)


def classify_users(
    report: UsageReport,
    rule: Optional[ClassificationRule] = None,
    roster: Sequence[str] = (),
) -> List[UserProfile]:
    """Rank customers by total usage and give each the highest band its rank quantile reaches.

    The top-ranked customer sits at quantile 1 and the bottom one at 0; equal
    totals are ranked by customer id. Customers in ``roster`` without usage
    rank with a zero total. Profiles come back in customer id order.
    """
    rule = rule or DEFAULT_RULE
    totals: Dict[str, int] = {customer_id: 0 for customer_id in roster}
    totals.update(report.customer_totals)
    ranked = sorted(totals, key=lambda customer: (-totals[customer], id_key(customer)))
    count = len(ranked)
    profiles: List[UserProfile] = []
    for rank, customer_id in enumerate(ranked):
        quantile = Fraction(1) if count == 1 else 1 - Fraction(rank, count - 1)
        band = next(band for band in rule.bands if quantile >= band.lower_bound)
        profiles.append(UserProfile(customer_id, band.user_type, band.priority))
    logger.info("classified %d customer(s)", len(profiles))
    return sorted(profiles, key=lambda profile: id_key(profile.id))


def rule_from_document(document: Any) -> ClassificationRule:
    mapped = map_to_schema(document, "ClassificationRule")
    bands: List[ClassificationBand] = []
    for band in mapped["bands"]:
        try:
            lower_bound = Fraction(str(band["lower_bound"]))
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidRuleError(f"RULE ERROR: invalid lower bound {band['lower_bound']!r}") from exc
        bands.append(ClassificationBand(band["user_type"], positive_int(band["priority"], "priority"), lower_bound))
    return ClassificationRule(bands=tuple(bands))


def load_rule(path: str) -> ClassificationRule:
    try:
        with open(path, encoding="utf-8") as fh:
            document = yaml.safe_load(fh)
    except (OSError, UnicodeDecodeError, yaml.YAMLError) as exc:
        raise ScenarioParseError(f"PARSE ERROR: unable to read rule file {path}: {exc}") from exc
    return rule_from_document(document)
