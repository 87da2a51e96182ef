"""Network instance and generator schemas."""
from typing import Dict, List, Optional, Tuple

import networkx as nx
import numpy as np
from pydantic import Field, field_validator, model_validator

from config.constants import GeneratorDefaults, NoiseDefaults
from schemas.base_schema import BaseSchema


class NodeRecord(BaseSchema):
    """Node placed in the plane with its own noise power."""

    id: int = Field(..., ge=0, description="Node id, equal to its position in the node list")
    x: float = Field(..., description="Horizontal position in meters")
    y: float = Field(..., description="Vertical position in meters")
    noise_power: float = Field(..., gt=0, description="Noise power in watts")


class EdgeRecord(BaseSchema):
    """Directed link from one node to another."""

    tail: int = Field(..., ge=0, description="Transmitting node id")
    head: int = Field(..., ge=0, description="Receiving node id")

    @model_validator(mode="after")
    def no_self_loop(self):
        if self.tail == self.head:
            raise ValueError(f"self-loop edge on node {self.tail}")
        return self

    def as_tuple(self) -> Tuple[int, int]:
        return self.tail, self.head


class NetworkInstance(BaseSchema):
    """
    Directed geometric graph with per-node noise and a source/destination pair.

    Edges are kept sorted by (tail, head); the position of an edge in `edges` is its
    variable index everywhere else in the toolkit.
    """

    nodes: List[NodeRecord] = Field(..., min_length=2, description="Nodes ordered by id")
    edges: List[EdgeRecord] = Field(default_factory=list, description="Directed edges")
    source: int = Field(..., ge=0, description="Source node id (S)")
    destination: int = Field(..., ge=0, description="Destination node id (D)")

    @field_validator("edges")
    @classmethod
    def sort_edges(cls, edges: List[EdgeRecord]) -> List[EdgeRecord]:
        return sorted(edges, key=EdgeRecord.as_tuple)

    @model_validator(mode="after")
    def check_topology(self):
        node_count = len(self.nodes)
        for position, node in enumerate(self.nodes):
            if node.id != position:
                raise ValueError(f"node ids must be 0..{node_count - 1} in order; found {node.id} at {position}")
        if self.source >= node_count or self.destination >= node_count:
            raise ValueError("source and destination must be valid node ids")
        if self.source == self.destination:
            raise ValueError("source and destination must differ")
        seen = set()
        for edge in self.edges:
            if edge.tail >= node_count or edge.head >= node_count:
                raise ValueError(f"unknown node id in edge ({edge.tail}, {edge.head})")
            if edge.as_tuple() in seen:
                raise ValueError(f"duplicate edge ({edge.tail}, {edge.head})")
            seen.add(edge.as_tuple())
        return self

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def positions(self) -> np.ndarray:
        """(N, 2) array of node coordinates."""
        return np.array([[node.x, node.y] for node in self.nodes], dtype=float)

    def noise_powers(self) -> np.ndarray:
        return np.array([node.noise_power for node in self.nodes], dtype=float)

    def edge_array(self) -> np.ndarray:
        """(E, 2) integer array of (tail, head)."""
        if not self.edges:
            return np.zeros((0, 2), dtype=int)
        return np.array([edge.as_tuple() for edge in self.edges], dtype=int)

    def edge_lengths(self) -> np.ndarray:
        """Euclidean length d_ij of every edge, in edge order."""
        pairs = self.edge_array()
        coords = self.positions()
        return np.linalg.norm(coords[pairs[:, 0]] - coords[pairs[:, 1]], axis=1)

    def out_edges(self) -> Dict[int, List[int]]:
        """Edge indices leaving each node, ascending."""
        table: Dict[int, List[int]] = {node.id: [] for node in self.nodes}
        for index, edge in enumerate(self.edges):
            table[edge.tail].append(index)
        return table

    def to_digraph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(node.id for node in self.nodes)
        graph.add_edges_from((edge.tail, edge.head, {"index": index}) for index, edge in enumerate(self.edges))
        return graph

    def is_destination_reachable(self) -> bool:
        return nx.has_path(self.to_digraph(), self.source, self.destination)


class GeneratorConfig(BaseSchema):
    """Parameters of the random geometric instance generator."""

    node_count: int = Field(..., ge=2, description="Number of nodes")
    connection_radius: Optional[float] = Field(
        None, gt=0, description="Radio range in meters; calibrated to the edge-density table when omitted"
    )
    area_side: float = Field(GeneratorDefaults.AREA_SIDE_M, gt=0, description="Side of the square area in meters")
    noise_mean_dbm: float = Field(NoiseDefaults.MEAN_DBM, description="Mean node noise in dBm")
    noise_stddev_dbm: float = Field(NoiseDefaults.STDDEV_DBM, ge=0, description="Node noise deviation in dBm")
    seed: int = Field(0, ge=0, lt=2 ** 64, description="64-bit seed")
    source: Optional[int] = Field(None, ge=0, description="Source override")
    destination: Optional[int] = Field(None, ge=0, description="Destination override")
    max_retries: int = Field(GeneratorDefaults.MAX_RETRIES, ge=1, description="Regeneration attempts")

    @model_validator(mode="after")
    def check_overrides(self):
        for name in ("source", "destination"):
            value = getattr(self, name)
            if value is not None and value >= self.node_count:
                raise ValueError(f"{name} override {value} is not a node id")
        if self.source is not None and self.source == self.destination:
            raise ValueError("source and destination overrides must differ")
        return self
