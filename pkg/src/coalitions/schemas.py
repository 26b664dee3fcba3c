from __future__ import annotations

from typing import Annotated, Iterable, Literal, Optional, Union

from pydantic import Field

from src.graphs.schemas import VertexSet, VertexSetLike
from src.shared.models import FrozenModel


class Partition(FrozenModel):
    """Ordered blocks of vertices. Canonical form lists blocks by minimum vertex."""

    blocks: tuple[VertexSet, ...]

    @classmethod
    def from_blocks(cls, blocks: Iterable[VertexSetLike]) -> Partition:
        return cls(blocks=tuple(VertexSet.coerce(b) for b in blocks)).canonical()

    def canonical(self) -> Partition:
        ordered = sorted(self.blocks, key=lambda b: b.min_vertex() if b.mask else -1)
        return Partition(blocks=tuple(ordered))

    def is_canonical(self) -> bool:
        return self.blocks == self.canonical().blocks

    def sort_key(self) -> tuple[tuple[int, ...], ...]:
        """Tie-break order among witnesses of one size: block sequence, each block as its sorted tuple."""
        return tuple(b.vertices() for b in self.blocks)

    def block_of(self, v: int) -> int:
        for i, block in enumerate(self.blocks):
            if v in block:
                return i
        raise ValueError(f"vertex {v} is in no block")

    def as_lists(self) -> list[list[int]]:
        return [list(b.vertices()) for b in self.blocks]

    def __len__(self) -> int:
        return len(self.blocks)


# ---------------------------------------------------------------------------
# Certificates
# ---------------------------------------------------------------------------

class StandaloneFair(FrozenModel):
    kind: Literal["standalone"] = "standalone"


class Partner(FrozenModel):
    kind: Literal["partner"] = "partner"
    partner: int = Field(..., ge=0, description="Index of the block this one forms a coalition with")


Justification = Annotated[Union[StandaloneFair, Partner], Field(discriminator="kind")]


class PartitionCertificate(FrozenModel):
    k: int = Field(..., ge=1)
    entries: tuple[Justification, ...]

    def partners(self) -> dict[int, int]:
        return {i: e.partner for i, e in enumerate(self.entries) if isinstance(e, Partner)}

    def standalone(self) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.entries) if isinstance(e, StandaloneFair))


ViolationReason = Literal["fair_wrong_size", "no_partner"]


class Violation(FrozenModel):
    block: int
    members: VertexSet
    reason: ViolationReason
    message: str


# ---------------------------------------------------------------------------
# Solver results and bounds
# ---------------------------------------------------------------------------

class SolveResult(FrozenModel):
    outcome: Literal["value", "no_partition"]
    k: int
    value: Optional[int] = None
    witness: Optional[Partition] = None
    certificate: Optional[PartitionCertificate] = None
    nodes: int = Field(0, description="Candidate blocks examined")

    @classmethod
    def no_partition(cls, k: int, nodes: int = 0) -> SolveResult:
        return cls(outcome="no_partition", k=k, nodes=nodes)

    @property
    def found(self) -> bool:
        return self.outcome == "value"

    def same_answer(self, other: SolveResult) -> bool:
        return (self.outcome, self.value, self.witness) == (other.outcome, other.value, other.witness)


BoundSource = Literal[
    "order",
    "max_degree",
    "singleton_split",
    "regular_range",
    "tree_half_order",
    "tree_max_degree",
    "min_degree_fairness",
    "domatic",
]


class Bound(FrozenModel):
    value: int
    source: BoundSource
    search_safe: bool = Field(False, description="Proven from the definitions and allowed to seed the exact search")
    note: str = ""


class BoundsReport(FrozenModel):
    k: int
    lower: Optional[Bound] = None
    upper: Bound
    lower_candidates: tuple[Bound, ...] = ()
    upper_candidates: tuple[Bound, ...] = ()

    @property
    def search_ceiling(self) -> int:
        return min(b.value for b in self.upper_candidates if b.search_safe)
