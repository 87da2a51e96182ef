"""Bijection between directed edges and binary variable indices."""
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Tuple

from schemas.network_schema import NetworkInstance


@dataclass(frozen=True)
class VariableMap:
    """Edges sorted by (tail, head); edge k is variable x_k."""

    edges: Tuple[Tuple[int, int], ...]
    _index: Dict[Tuple[int, int], int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        ordered = tuple(sorted(self.edges))
        if ordered != self.edges:
            raise ValueError("variable map edges must be sorted by (tail, head)")
        index = {edge: position for position, edge in enumerate(self.edges)}
        if len(index) != len(self.edges):
            raise ValueError("variable map edges must be distinct")
        object.__setattr__(self, "_index", index)

    @classmethod
    def from_instance(cls, instance: NetworkInstance) -> "VariableMap":
        return cls(tuple(edge.as_tuple() for edge in instance.edges))

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.edges)

    def index_of(self, tail: int, head: int) -> int:
        return self._index[(tail, head)]

    def edge_of(self, index: int) -> Tuple[int, int]:
        return self.edges[index]

    def indices_from(self, node: int) -> List[int]:
        return [position for position, (tail, _) in enumerate(self.edges) if tail == node]

    def indices_into(self, node: int) -> List[int]:
        return [position for position, (_, head) in enumerate(self.edges) if head == node]
