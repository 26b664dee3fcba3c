"""Coalition predicate, partition validation with certificates, and coalition graphs."""

import logging
from typing import Union

from src.coalitions.schemas import (
    Partition,
    PartitionCertificate,
    Partner,
    StandaloneFair,
    Violation,
)
from src.domination.service import FairnessTable, is_kfair_dominating
from src.exceptions import PartitionStructureError
from src.graphs.bits import popcount
from src.graphs.schemas import Graph, VertexSet, VertexSetLike

logger = logging.getLogger(__name__)


def check_structure(g: Graph, p: Partition) -> None:
    """Raise PartitionStructureError unless the blocks partition 0..n-1."""
    seen = 0
    for i, block in enumerate(p.blocks):
        if not block.mask:
            raise PartitionStructureError(f"block {i} is empty")
        if block.mask & ~g.full:
            outside = [v for v in block.vertices() if v >= g.n]
            raise PartitionStructureError(f"block {i} mentions vertices {outside} outside 0..{g.n - 1}")
        if block.mask & seen:
            shared = VertexSet(mask=block.mask & seen).vertices()
            raise PartitionStructureError(f"block {i} overlaps earlier blocks at {list(shared)}")
        seen |= block.mask
    if seen != g.full:
        missing = VertexSet(mask=g.full & ~seen).vertices()
        raise PartitionStructureError(f"vertices {list(missing)} are in no block")


class CoalitionService:
    """k-fair coalitions of one graph.

    Block fairness goes through a shared ``FairnessTable``, so validating several
    partitions of the same graph evaluates each vertex mask once.
    """

    def __init__(self, g: Graph, k: int):
        self.g = g
        self.k = k
        self.fair = FairnessTable(g, k)

    def is_coalition(self, a: VertexSetLike, b: VertexSetLike) -> bool:
        """Neither ``a`` nor ``b`` is k-fair dominating but their union is."""
        a, b = VertexSet.coerce(a), VertexSet.coerce(b)
        if not a.mask or not b.mask:
            raise ValueError("coalition members must be non-empty")
        if not a.isdisjoint(b):
            raise ValueError(f"{a} and {b} overlap")
        return (
            not is_kfair_dominating(self.g, a, self.k)
            and not is_kfair_dominating(self.g, b, self.k)
            and is_kfair_dominating(self.g, a | b, self.k)
        )

    def check_structure(self, p: Partition) -> None:
        check_structure(self.g, p)

    def validate(self, p: Partition) -> Union[PartitionCertificate, Violation]:
        """Certificate naming the smallest-index partner of every non-fair block, or the first violation."""
        check_structure(self.g, p)
        k = self.k
        masks = [b.mask for b in p.blocks]
        fair = [self.fair(m) for m in masks]

        entries = []
        for i, mask in enumerate(masks):
            if fair[i]:
                if popcount(mask) == k:
                    entries.append(StandaloneFair())
                    continue
                return Violation(
                    block=i,
                    members=p.blocks[i],
                    reason="fair_wrong_size",
                    message=f"block {i} is {k}-fair dominating with {popcount(mask)} vertices, not {k}",
                )
            partner = next(
                (j for j, other in enumerate(masks) if j != i and not fair[j] and self.fair(mask | other)),
                None,
            )
            if partner is None:
                return Violation(
                    block=i,
                    members=p.blocks[i],
                    reason="no_partner",
                    message=f"block {i} is not {k}-fair dominating and forms no {k}-fair coalition",
                )
            entries.append(Partner(partner=partner))
        return PartitionCertificate(k=k, entries=tuple(entries))

    def recheck(self, p: Partition, cert: PartitionCertificate) -> bool:
        """Re-evaluate every certificate entry with the raw predicates."""
        if cert.k != self.k or len(cert.entries) != len(p.blocks):
            return False
        for i, entry in enumerate(cert.entries):
            block = p.blocks[i]
            if isinstance(entry, StandaloneFair):
                if len(block) != self.k or not is_kfair_dominating(self.g, block, self.k):
                    return False
            elif entry.partner == i or entry.partner >= len(p.blocks):
                return False
            elif not self.is_coalition(block, p.blocks[entry.partner]):
                return False
        return True

    def partner_count(self, p: Partition, i: int) -> int:
        if not 0 <= i < len(p.blocks):
            raise IndexError(f"block index {i} out of range for {len(p.blocks)} blocks")
        check_structure(self.g, p)
        block = p.blocks[i]
        return sum(
            1 for j, other in enumerate(p.blocks)
            if j != i and self.is_coalition(block, other)
        )

    def partner_limit(self) -> int:
        """Most coalition partners any block can have: max(1, Δ - k + 2).

        Equals the published Δ - k + 2 whenever k <= Δ + 1.
        """
        return max(1, self.g.max_degree - self.k + 2)

    def coalition_graph(self, p: Partition) -> Graph:
        """kFCG: one vertex per block, an edge between blocks that form a k-fair coalition."""
        outcome = self.validate(p)
        if isinstance(outcome, Violation):
            raise ValueError(f"not a {self.k}-fair coalition partition: {outcome.message}")
        edges = [
            (i, j)
            for i in range(len(p.blocks))
            for j in range(i + 1, len(p.blocks))
            if self.is_coalition(p.blocks[i], p.blocks[j])
        ]
        return Graph.from_edges(len(p.blocks), edges)

    def coalition_graph_dot(self, p: Partition) -> str:
        kfcg = self.coalition_graph(p)
        lines = [f"graph kFCG_{self.k} {{"]
        for i, block in enumerate(p.blocks):
            label = "{" + ", ".join(map(str, block.vertices())) + "}"
            shape = ", shape=box" if not kfcg.adjacency[i] else ""
            lines.append(f'  {i} [label="{label}"{shape}];')
        for u, v in kfcg.edges():
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"
