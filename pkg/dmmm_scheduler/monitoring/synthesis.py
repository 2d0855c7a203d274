"""Seeded synthetic usage patterns (customers x resources x hourly buckets)."""

from __future__ import annotations

import logging
from typing import List, Sequence, Union

import numpy as np
from typing_extensions import Unpack

from dmmm_scheduler.errors import EmptyInputError, NonPositiveValueError, ValidationError
from dmmm_scheduler.types.model import UsageRecord
from dmmm_scheduler.types.options import SynthesisOptions

logger = logging.getLogger(__name__)

PROFILES = ("flat", "bursty", "diurnal")
DEFAULT_BASE = 10
DEFAULT_PERIOD = 24


def synthesize_usage(
    seed: int,
    customers: Union[int, Sequence[str]],
    resources: Union[int, Sequence[str]],
    horizon: int,
    profile: str = "flat",
    **options: Unpack[SynthesisOptions],
) -> List[UsageRecord]:
    """One record per (customer, resource, bucket); a pure function of its arguments."""
    customer_ids = _identifiers(customers, "c", "customers")
    resource_ids = _identifiers(resources, "r", "resources")
    if horizon < 1:
        raise NonPositiveValueError(f"VALUE ERROR: non-positive horizon {horizon}")
    if profile not in PROFILES:
        raise ValidationError(f"CONFIG ERROR: unknown usage profile {profile!r}; expected one of {', '.join(PROFILES)}")
    base = options.get("base", DEFAULT_BASE)
    period = options.get("period", DEFAULT_PERIOD)

    rng = np.random.default_rng(seed)
    buckets = np.arange(horizon)
    records: List[UsageRecord] = []
    for customer_id in customer_ids:
        level = 1 if profile == "flat" else int(rng.integers(1, 5))
        for resource_id in resource_ids:
            if profile == "flat":
                series = np.full(horizon, base, dtype=np.int64)
            elif profile == "bursty":
                series = _bursty(rng, horizon, base * level)
            else:
                series = _diurnal(rng, buckets, base * level, period)
            records.extend(
                UsageRecord(customer_id, resource_id, int(bucket), int(amount))
                for bucket, amount in zip(buckets, series)
            )
    logger.debug("synthesized %d %s usage records (seed %d)", len(records), profile, seed)
    return records


def _bursty(rng: np.random.Generator, horizon: int, amplitude: int) -> np.ndarray:
    baseline = np.full(horizon, max(amplitude // 4, 1), dtype=np.int64)
    bursts = rng.random(horizon) < 0.2
    heights = rng.integers(amplitude, 4 * amplitude + 1, size=horizon)
    return baseline + np.where(bursts, heights, 0)


def _diurnal(rng: np.random.Generator, buckets: np.ndarray, amplitude: int, period: int) -> np.ndarray:
    phase = int(rng.integers(0, period))
    wave = amplitude * (1.0 + np.sin(2.0 * np.pi * (buckets - phase) / period))
    noise = rng.integers(0, max(amplitude // 2, 1) + 1, size=len(buckets))
    return np.clip(np.rint(wave).astype(np.int64) + noise, 0, None)


def _identifiers(value: Union[int, Sequence[str]], prefix: str, kind: str) -> List[str]:
    identifiers = [f"{prefix}{index}" for index in range(1, value + 1)] if isinstance(value, int) else list(value)
    if not identifiers:
        raise EmptyInputError(f"VALUE ERROR: at least one of {kind} is required")
    return identifiers
