"""Finish-event queue for the discrete-event executor."""

from __future__ import annotations

import heapq
from typing import List, Set, Tuple

from dmmm_scheduler.errors import PolicyContractError
from dmmm_scheduler.scenario.parameters import IdKey, id_key

_Entry = Tuple[int, IdKey, str]


class EventQueue:
    """Pending ``(finish_time, resource_id)`` pairs, popped by time then natural resource id."""

    def __init__(self) -> None:
        self._heap: List[_Entry] = []
        self._resources: Set[str] = set()

    def __len__(self) -> int:
        return len(self._heap)

    def __bool__(self) -> bool:
        return bool(self._heap)

    def push(self, finish: int, resource_id: str) -> None:
        if resource_id in self._resources:
            raise PolicyContractError(f"CONTRACT ERROR: resource {resource_id!r} already has a pending finish event")
        heapq.heappush(self._heap, (finish, id_key(resource_id), resource_id))
        self._resources.add(resource_id)

    def peek_time(self) -> int:
        return self._heap[0][0]

    def pop(self) -> Tuple[int, str]:
        finish, _, resource_id = heapq.heappop(self._heap)
        self._resources.discard(resource_id)
        return finish, resource_id

    def pop_due(self) -> Tuple[int, List[str]]:
        """Pop every event sharing the earliest finish time."""
        finish, resource_id = self.pop()
        released = [resource_id]
        while self._heap and self._heap[0][0] == finish:
            released.append(self.pop()[1])
        return finish, released
