from __future__ import annotations

from decimal import Decimal
from fractions import Fraction

import pytest

from dmmm_scheduler.errors import NonPositiveValueError, SchemaTypeError
from dmmm_scheduler.scenario.parameters import (
    format_speed_factor,
    id_key,
    non_negative_int,
    positive_int,
    speed_factor,
)


def test_id_key_orders_digit_runs_numerically() -> None:
    ids = ["t10", "t2", "t1", "r1b", "t", "r1a"]

    assert sorted(ids, key=id_key) == ["r1a", "r1b", "t", "t1", "t2", "t10"]


def test_id_key_separates_zero_padded_ids() -> None:
    assert id_key("t01") != id_key("t1")
    assert sorted(["t1", "t10", "t01", "t2"], key=id_key) == ["t01", "t1", "t2", "t10"]
    assert sorted(["t01", "t1"], key=id_key) == sorted(["t1", "t01"], key=id_key)


def test_positive_int_accepts_integral_decimals() -> None:
    assert positive_int(3, "weight") == 3
    assert positive_int(Decimal("4"), "weight") == 4
    assert positive_int(5.0, "weight") == 5


@pytest.mark.parametrize("value", [True, "3", Decimal("1.5"), None])
def test_positive_int_rejects_non_integers(value) -> None:
    with pytest.raises(SchemaTypeError):
        positive_int(value, "weight")


def test_positive_int_rejects_zero_and_negative() -> None:
    with pytest.raises(NonPositiveValueError, match="non-positive duration"):
        positive_int(0, "duration")
    with pytest.raises(NonPositiveValueError):
        positive_int(-2, "duration")


def test_non_negative_int() -> None:
    assert non_negative_int(0, "bucket_start") == 0
    with pytest.raises(NonPositiveValueError):
        non_negative_int(-1, "bucket_start")


@pytest.mark.parametrize(
    "value, expected",
    [
        (1, Fraction(1)),
        (Decimal("1.5"), Fraction(3, 2)),
        (0.1, Fraction(1, 10)),
        ("2/3", Fraction(2, 3)),
    ],
)
def test_speed_factor_is_exact(value, expected) -> None:
    assert speed_factor(value) == expected


@pytest.mark.parametrize("value", [0, -1, "0/5"])
def test_speed_factor_must_be_positive(value) -> None:
    with pytest.raises(NonPositiveValueError):
        speed_factor(value)


@pytest.mark.parametrize("value", [True, "fast", "1/0", [1]])
def test_speed_factor_rejects_non_numeric(value) -> None:
    with pytest.raises(SchemaTypeError):
        speed_factor(value)


def test_format_speed_factor() -> None:
    assert format_speed_factor(Fraction(2)) == 2
    assert format_speed_factor(Fraction(3, 2)) == "3/2"
