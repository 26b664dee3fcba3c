from __future__ import annotations

from typing import Iterable, Union

import networkx as nx
from pydantic import Field, model_serializer, model_validator

from src.graphs.bits import bits_tuple, full_mask, lowest_bit, mask_of, popcount
from src.shared.models import FrozenModel


class VertexSet(FrozenModel):
    """A subset of 0..n-1 stored as a bitmask. Serialized as its sorted member list."""

    mask: int = Field(0, ge=0)

    @model_validator(mode="before")
    @classmethod
    def _from_members(cls, data):
        if isinstance(data, (list, tuple, set, frozenset)):
            if any(not isinstance(v, int) or v < 0 for v in data):
                raise ValueError(f"vertex ids must be non-negative integers, got {list(data)}")
            return {"mask": mask_of(data)}
        return data

    @model_serializer
    def _as_members(self) -> list[int]:
        return list(self.vertices())

    @classmethod
    def of(cls, vertices: Iterable[int]) -> VertexSet:
        vertices = list(vertices)
        if any(v < 0 for v in vertices):
            raise ValueError(f"negative vertex in {vertices}")
        return cls(mask=mask_of(vertices))

    @classmethod
    def coerce(cls, value: VertexSetLike) -> VertexSet:
        if isinstance(value, VertexSet):
            return value
        if isinstance(value, int):
            return cls(mask=value)
        return cls.of(value)

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and v >= 0 and bool(self.mask >> v & 1)

    def __len__(self) -> int:
        return popcount(self.mask)

    def __or__(self, other: VertexSet) -> VertexSet:
        return VertexSet(mask=self.mask | other.mask)

    def __and__(self, other: VertexSet) -> VertexSet:
        return VertexSet(mask=self.mask & other.mask)

    def vertices(self) -> tuple[int, ...]:
        return bits_tuple(self.mask)

    def min_vertex(self) -> int:
        if not self.mask:
            raise ValueError("empty vertex set has no minimum")
        return lowest_bit(self.mask)

    def isdisjoint(self, other: VertexSet) -> bool:
        return not self.mask & other.mask

    def issubset(self, other: VertexSet) -> bool:
        return not self.mask & ~other.mask

    def intersection_size(self, other: VertexSet) -> int:
        return popcount(self.mask & other.mask)

    def __repr__(self) -> str:
        return f"VertexSet({set(self.vertices()) or '{}'})"


VertexSetLike = Union[VertexSet, int, Iterable[int]]


class Graph(FrozenModel):
    """Immutable simple graph on vertices 0..n-1; ``adjacency[v]`` is the bitmask of N(v)."""

    n: int = Field(..., ge=0)
    adjacency: tuple[int, ...]

    @model_validator(mode="after")
    def _check_simple(self) -> Graph:
        if len(self.adjacency) != self.n:
            raise ValueError(f"expected {self.n} neighborhoods, got {len(self.adjacency)}")
        full = full_mask(self.n)
        for v, nbrs in enumerate(self.adjacency):
            if nbrs < 0 or nbrs & ~full:
                raise ValueError(f"neighborhood of {v} mentions a vertex >= {self.n}")
            if nbrs >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in bits_tuple(nbrs):
                if not self.adjacency[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        return self

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if n < 0:
            raise ValueError("order must be non-negative")
        adjacency = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for order {n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adjacency[u] |= 1 << v
            adjacency[v] |= 1 << u
        return cls(n=n, adjacency=tuple(adjacency))

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> Graph:
        nodes = list(graph.nodes())
        try:
            nodes.sort()
        except TypeError:
            pass
        index = {node: i for i, node in enumerate(nodes)}
        return cls.from_edges(
            len(nodes),
            ((index[u], index[v]) for u, v in graph.edges() if u != v),
        )

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph

    @property
    def full(self) -> int:
        return full_mask(self.n)

    def vertex_set(self) -> VertexSet:
        return VertexSet(mask=self.full)

    def neighbors(self, v: int) -> VertexSet:
        return VertexSet(mask=self.adjacency[v])

    def degree(self, v: int) -> int:
        return popcount(self.adjacency[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(popcount(nbrs) for nbrs in self.adjacency)

    @property
    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [
            (u, v)
            for u, nbrs in enumerate(self.adjacency)
            for v in bits_tuple(nbrs)
            if u < v
        ]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def is_regular(self, k: int | None = None) -> bool:
        degrees = set(self.degrees())
        if len(degrees) > 1:
            return False
        return k is None or degrees == {k} or (self.n == 0 and k == 0)

    def is_edgeless(self) -> bool:
        return not any(self.adjacency)

    def is_connected(self) -> bool:
        return self.n > 0 and nx.is_connected(self.to_networkx())

    def is_tree(self) -> bool:
        return self.n > 0 and self.edge_count == self.n - 1 and self.is_connected()

    def is_bipartite(self) -> bool:
        return nx.is_bipartite(self.to_networkx())

    def triangle_count(self) -> int:
        return sum(nx.triangles(self.to_networkx()).values()) // 3

    def is_corona_k1(self) -> bool:
        """True iff the graph is H∘K_1 for some graph H: vertices pair up as (v, pendant of v)."""
        if self.n == 0 or self.n % 2:
            return False
        if self.n == 2:
            return self.edge_count == 1
        leaves = [v for v in range(self.n) if self.degree(v) == 1]
        supports = {lowest_bit(self.adjacency[v]) for v in leaves}
        if 2 * len(leaves) != self.n or len(supports) != len(leaves):
            return False
        return supports.isdisjoint(leaves)
