"""Exact C_kf by descending block-count search.

For m from the search ceiling down to 1 the solver looks for a valid partition with
exactly m blocks; the first m that succeeds is the answer. Blocks are built one at a
time, each containing the lowest unplaced vertex, and candidates are tried in
lexicographic order of their sorted vertex tuples, so the first hit is also the
least witness in canonical block order.
"""

import logging
from typing import Iterator, Optional

from joblib import Parallel, delayed

from src.coalitions.bounds import lower_bound, search_ceiling
from src.coalitions.schemas import Partition, SolveResult, Violation
from src.coalitions.service import CoalitionService
from src.config import settings
from src.domination.service import FairnessTable
from src.exceptions import OrderCapExceeded, SolverInconclusive
from src.graphs.bits import bits_tuple, iter_bits, popcount
from src.graphs.schemas import Graph, VertexSet

logger = logging.getLogger(__name__)


class _BudgetExhausted(Exception):
    pass


class _BlockSearch:
    """Depth-first search for a partition into exactly ``m`` blocks."""

    def __init__(self, g: Graph, k: int, m: int, cap: int, fair: Optional[FairnessTable] = None):
        self.g = g
        self.k = k
        self.m = m
        self.cap = cap
        self.fair = fair or FairnessTable(g, k)
        self.adjacency = g.adjacency
        self.nodes = 0

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.cap:
            raise _BudgetExhausted

    def candidates(self, remaining: int, placed: int) -> Iterator[int]:
        slots = self.m - placed
        if slots == 1:
            yield remaining
            return
        max_size = popcount(remaining) - (slots - 1)
        if max_size < 1:
            return
        low = remaining & -remaining
        pool = bits_tuple(remaining ^ low)

        def grow(block: int, start: int, size: int) -> Iterator[int]:
            yield block
            if size == max_size:
                return
            for i in range(start, len(pool)):
                yield from grow(block | 1 << pool[i], i + 1, size + 1)

        yield from grow(low, 0, 1)

    def _future_partner_possible(self, block: int, placed_union: int, remaining: int) -> bool:
        # Every placed vertex outside the block must be able to reach exactly k
        # neighbours in block ∪ Y for some Y drawn from the unplaced vertices.
        if not remaining:
            return False
        k = self.k
        for v in iter_bits(placed_union & ~block):
            inside = (self.adjacency[v] & block).bit_count()
            if inside > k or inside + (self.adjacency[v] & remaining).bit_count() < k:
                return False
        return True

    def _settle(self, blocks: list[int], remaining: int, settled: int) -> Optional[int]:
        """Mark blocks that are justified; None if some block can never be."""
        placed_union = 0
        for mask in blocks:
            placed_union |= mask
        for i, mask in enumerate(blocks):
            if settled >> i & 1:
                continue
            if self.fair(mask):
                settled |= 1 << i
                continue
            partner = next(
                (
                    j for j, other in enumerate(blocks)
                    if j != i and not self.fair(other) and self.fair(mask | other)
                ),
                None,
            )
            if partner is not None:
                settled |= 1 << i | 1 << partner
            elif not self._future_partner_possible(mask, placed_union, remaining):
                return None
        return settled

    def place(self, block: int, blocks: list[int], remaining: int, settled: int) -> Optional[list[int]]:
        """Try ``block`` as the next block; return the completed partition or None."""
        self._tick()
        if self.fair(block) and popcount(block) != self.k:
            return None
        blocks.append(block)
        try:
            rest = remaining & ~block
            settled = self._settle(blocks, rest, settled)
            if settled is None:
                return None
            if len(blocks) == self.m:
                return list(blocks) if not rest else None
            for candidate in self.candidates(rest, len(blocks)):
                found = self.place(candidate, blocks, rest, settled)
                if found is not None:
                    return found
            return None
        finally:
            blocks.pop()


def _run_branch(g: Graph, k: int, m: int, first: int, cap: int) -> tuple[Optional[list[int]], int, bool]:
    search = _BlockSearch(g, k, m, cap)
    try:
        found = search.place(first, [], g.full, 0)
    except _BudgetExhausted:
        return None, search.nodes, True
    return found, search.nodes, False


class CoalitionSolver:
    def __init__(
        self,
        g: Graph,
        k: int,
        budget: Optional[int] = None,
        workers: Optional[int] = None,
        order_cap: Optional[int] = None,
    ):
        if k < 1:
            raise ValueError(f"k must be a positive integer, got {k}")
        if g.n == 0:
            raise ValueError("the solver needs a graph with at least one vertex")
        cap = order_cap if order_cap is not None else settings.SOLVER_ORDER_CAP
        if g.n > cap:
            raise OrderCapExceeded(g.n, cap)
        self.g = g
        self.k = k
        self.order_cap = cap
        self.budget = budget if budget is not None else settings.SOLVER_NODE_BUDGET
        self.workers = max(1, workers if workers is not None else settings.SOLVER_WORKERS)
        self.fair = FairnessTable(g, k)
        self.nodes = 0

    def _inconclusive(self) -> SolverInconclusive:
        report = lower_bound(self.g, self.k, order_cap=self.order_cap)
        best = report.lower.value if report.lower is not None else None
        logger.warning("node budget %d exhausted after %d nodes (k=%d, n=%d)", self.budget, self.nodes, self.k, self.g.n)
        return SolverInconclusive(self.nodes, self.budget, best_lower_bound=best)

    def _search_sequential(self, m: int) -> Optional[list[int]]:
        search = _BlockSearch(self.g, self.k, m, self.budget - self.nodes, fair=self.fair)
        found = None
        try:
            for first in search.candidates(self.g.full, 0):
                found = search.place(first, [], self.g.full, 0)
                if found is not None:
                    break
        except _BudgetExhausted:
            self.nodes += search.nodes
            raise self._inconclusive()
        self.nodes += search.nodes
        return found

    def _search_parallel(self, m: int) -> Optional[list[int]]:
        root = _BlockSearch(self.g, self.k, m, 0)
        firsts = list(root.candidates(self.g.full, 0))
        chunk = 4 * self.workers
        with Parallel(n_jobs=self.workers) as pool:
            for start in range(0, len(firsts), chunk):
                cap = self.budget - self.nodes
                results = pool(
                    delayed(_run_branch)(self.g, self.k, m, first, cap)
                    for first in firsts[start:start + chunk]
                )
                # Fold branch results in candidate order so the outcome matches a single worker.
                for found, nodes, exhausted in results:
                    self.nodes += nodes
                    if exhausted or self.nodes > self.budget:
                        # sequential search stops on the tick that crosses the budget
                        self.nodes = self.budget + 1
                        raise self._inconclusive()
                    if found is not None:
                        return found
        return None

    def solve(self) -> SolveResult:
        ceiling = search_ceiling(self.g, self.k)
        logger.info("solving C_%df for n=%d from ceiling %d (workers=%d)", self.k, self.g.n, ceiling, self.workers)
        for m in range(ceiling, 0, -1):
            if self.workers > 1 and m > 1:
                found = self._search_parallel(m)
            else:
                found = self._search_sequential(m)
            logger.debug("m=%d: %s after %d nodes", m, "hit" if found else "none", self.nodes)
            if found is not None:
                return self._result(found)
        logger.info("no %d-fair coalition partition exists (n=%d, %d nodes)", self.k, self.g.n, self.nodes)
        return SolveResult.no_partition(self.k, nodes=self.nodes)

    def _result(self, masks: list[int]) -> SolveResult:
        witness = Partition(blocks=tuple(VertexSet(mask=mask) for mask in masks))
        cert = CoalitionService(self.g, self.k).validate(witness)
        if isinstance(cert, Violation):
            raise RuntimeError(f"search produced an invalid partition: {cert.message}")
        logger.info("C_%df = %d after %d nodes", self.k, len(masks), self.nodes)
        return SolveResult(
            outcome="value",
            k=self.k,
            value=len(masks),
            witness=witness,
            certificate=cert,
            nodes=self.nodes,
        )


def c_kf(
    g: Graph,
    k: int,
    budget: Optional[int] = None,
    workers: Optional[int] = None,
    order_cap: Optional[int] = None,
) -> SolveResult:
    return CoalitionSolver(g, k, budget=budget, workers=workers, order_cap=order_cap).solve()
