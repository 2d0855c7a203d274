from __future__ import annotations

from typing import Dict, Iterable, Iterator, List, Tuple

from dmmm_scheduler.errors import DuplicateUsageError, NegativeUsageError, UnknownCustomerError
from dmmm_scheduler.scenario.parameters import id_key
from dmmm_scheduler.types.model import UsageRecord

UsageKey = Tuple[str, str, int]


class UsageStore:
    """Usage amounts indexed by customer and (customer, resource); read-only once ingested."""

    def __init__(self, amounts: Dict[UsageKey, int]) -> None:
        self._amounts = dict(amounts)
        self._customer_totals: Dict[str, int] = {}
        self._resource_totals: Dict[str, Dict[str, int]] = {}
        self._buckets: Dict[str, Dict[int, int]] = {}
        for (customer_id, resource_id, bucket), amount in self._amounts.items():
            self._customer_totals[customer_id] = self._customer_totals.get(customer_id, 0) + amount
            per_resource = self._resource_totals.setdefault(customer_id, {})
            per_resource[resource_id] = per_resource.get(resource_id, 0) + amount
            per_bucket = self._buckets.setdefault(customer_id, {})
            per_bucket[bucket] = per_bucket.get(bucket, 0) + amount
        self.horizon = max((bucket + 1 for (_, _, bucket) in self._amounts), default=0)

    def __len__(self) -> int:
        return len(self._amounts)

    def customers(self) -> List[str]:
        return sorted(self._customer_totals, key=id_key)

    def resources(self) -> List[str]:
        return sorted({resource_id for (_, resource_id, _) in self._amounts}, key=id_key)

    def records(self) -> Iterator[UsageRecord]:
        for (customer_id, resource_id, bucket), amount in sorted(
            self._amounts.items(), key=lambda item: (id_key(item[0][0]), id_key(item[0][1]), item[0][2])
        ):
            yield UsageRecord(customer_id, resource_id, bucket, amount)

    def customer_total(self, customer_id: str) -> int:
        self._require(customer_id)
        return self._customer_totals[customer_id]

    def resource_totals(self, customer_id: str) -> Dict[str, int]:
        self._require(customer_id)
        totals = self._resource_totals[customer_id]
        return {resource_id: totals[resource_id] for resource_id in sorted(totals, key=id_key)}

    def bucket_totals(self, customer_id: str) -> List[int]:
        """Per-bucket usage summed over resources, zero-filled across the store horizon."""
        self._require(customer_id)
        per_bucket = self._buckets[customer_id]
        return [per_bucket.get(bucket, 0) for bucket in range(self.horizon)]

    def provider_bucket_totals(self) -> List[int]:
        totals = [0] * self.horizon
        for (_, _, bucket), amount in self._amounts.items():
            totals[bucket] += amount
        return totals

    def usage_series(self, customer_id: str) -> Dict[str, List[int]]:
        self._require(customer_id)
        series = {resource_id: [0] * self.horizon for resource_id in self.resource_totals(customer_id)}
        for (customer, resource_id, bucket), amount in self._amounts.items():
            if customer == customer_id:
                series[resource_id][bucket] = amount
        return series

    def _require(self, customer_id: str) -> None:
        if customer_id not in self._customer_totals:
            raise UnknownCustomerError(f"MONITOR ERROR: unknown customer {customer_id!r}")


def ingest_usage(records: Iterable[UsageRecord]) -> UsageStore:
    amounts: Dict[UsageKey, int] = {}
    for record in records:
        if record.amount < 0:
            raise NegativeUsageError(
                f"MONITOR ERROR: negative amount {record.amount} for {record.customer_id}/{record.resource_id}")
        if record.bucket_start < 0:
            raise NegativeUsageError(
                f"MONITOR ERROR: negative bucket_start {record.bucket_start} for {record.customer_id}")
        key = (record.customer_id, record.resource_id, record.bucket_start)
        if key in amounts:
            raise DuplicateUsageError(
                f"MONITOR ERROR: duplicate usage record for customer {key[0]!r}, resource {key[1]!r}, bucket {key[2]}")
        amounts[key] = record.amount
    return UsageStore(amounts)


def usage_series(store: UsageStore, customer_id: str) -> Dict[str, List[int]]:
    return store.usage_series(customer_id)
