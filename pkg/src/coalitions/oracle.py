"""Independent brute-force C_kf: every set partition, validated, largest kept.

Shares only the raw k-fair predicate with the solver; no memo, no pruning.
"""

import logging
from typing import Iterator

from src.coalitions.schemas import Partition, SolveResult, Violation
from src.coalitions.service import CoalitionService
from src.config import ORACLE_HARD_CAP, settings
from src.domination.service import kfd_mask
from src.exceptions import OrderCapExceeded
from src.graphs.bits import popcount
from src.graphs.schemas import Graph, VertexSet

logger = logging.getLogger(__name__)


def restricted_growth_strings(n: int) -> Iterator[list[int]]:
    """All a[0..n-1] with a[0] = 0 and a[i] <= 1 + max(a[:i]), in lexicographic order."""
    if n == 0:
        yield []
        return
    a = [0] * n
    b = [1] * n  # b[i] = 1 + max(a[:i])
    while True:
        yield list(a)
        j = n - 1
        while j > 0 and a[j] == b[j]:
            j -= 1
        if j == 0:
            return
        a[j] += 1
        for i in range(j + 1, n):
            a[i] = 0
            b[i] = max(b[j], a[j] + 1)


def bell_number(n: int) -> int:
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for value in row:
            nxt.append(nxt[-1] + value)
        row = nxt
    return row[0]


def _blocks_of(rgs: list[int]) -> list[int]:
    blocks = [0] * (max(rgs) + 1)
    for v, label in enumerate(rgs):
        blocks[label] |= 1 << v
    return blocks


def _is_coalition_partition(g: Graph, blocks: list[int], k: int) -> bool:
    fair = [kfd_mask(g.adjacency, g.full, b, k) for b in blocks]
    for i, block in enumerate(blocks):
        if fair[i]:
            if popcount(block) != k:
                return False
            continue
        if not any(
            j != i and not fair[j] and kfd_mask(g.adjacency, g.full, block | other, k)
            for j, other in enumerate(blocks)
        ):
            return False
    return True


def naive_c_kf(g: Graph, k: int) -> SolveResult:
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    if g.n == 0:
        raise ValueError("the oracle needs a graph with at least one vertex")
    cap = min(settings.ORACLE_ORDER_CAP, ORACLE_HARD_CAP)
    if g.n > cap:
        raise OrderCapExceeded(g.n, cap, what="oracle")

    best: list[int] = []
    best_key: tuple = ()
    examined = 0
    for rgs in restricted_growth_strings(g.n):
        examined += 1
        size = max(rgs) + 1
        if size < len(best):
            continue
        blocks = _blocks_of(rgs)
        if not _is_coalition_partition(g, blocks, k):
            continue
        key = tuple(VertexSet(mask=b).vertices() for b in blocks)
        if size > len(best) or key < best_key:
            best, best_key = blocks, key
    logger.debug("oracle examined %d partitions for n=%d", examined, g.n)

    if not best:
        return SolveResult.no_partition(k, nodes=examined)
    witness = Partition(blocks=tuple(VertexSet(mask=b) for b in best))
    cert = CoalitionService(g, k).validate(witness)
    if isinstance(cert, Violation):
        raise RuntimeError(f"oracle kept an invalid partition: {cert.message}")
    return SolveResult(outcome="value", k=k, value=len(best), witness=witness, certificate=cert, nodes=examined)
