"""k-fair domination: predicates, minimum sets, enumeration and the k-fair domatic number."""

import logging
from itertools import combinations
from typing import Iterator, Optional

from src.config import settings
from src.domination.schemas import FairnessProfile, FairReport
from src.exceptions import OrderCapExceeded
from src.graphs.bits import iter_bits, lowest_bit, mask_of, popcount, proper_submasks
from src.graphs.schemas import Graph, VertexSet, VertexSetLike
from src.ingestion.service import encode_graph6

logger = logging.getLogger(__name__)


def _check_k(k: int) -> None:
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")


def _as_subset(g: Graph, s: VertexSetLike) -> VertexSet:
    s = VertexSet.coerce(s)
    if s.mask & ~g.full:
        raise ValueError(f"{s} mentions a vertex outside 0..{g.n - 1}")
    return s


def kfd_mask(adjacency: tuple[int, ...], full: int, mask: int, k: int) -> bool:
    """Raw predicate on masks; callers have validated ``mask`` and ``k``."""
    rest = full & ~mask
    while rest:
        low = rest & -rest
        if (adjacency[low.bit_length() - 1] & mask).bit_count() != k:
            return False
        rest ^= low
    return True


class FairnessTable:
    """Write-once memo of the k-fair status of vertex masks for one graph and one k.

    ``dict.setdefault`` keeps the first stored answer, so concurrent writers agree.
    """

    def __init__(self, g: Graph, k: int):
        _check_k(k)
        self.graph = g
        self.k = k
        self._adjacency = g.adjacency
        self._full = g.full
        self._memo: dict[int, bool] = {}
        self.evaluations = 0

    def __call__(self, mask: int) -> bool:
        hit = self._memo.get(mask)
        if hit is None:
            self.evaluations += 1
            hit = self._memo.setdefault(mask, kfd_mask(self._adjacency, self._full, mask, self.k))
        return hit

    def __len__(self) -> int:
        return len(self._memo)


# ---------------------------------------------------------------------------
# Predicates
# ---------------------------------------------------------------------------

def is_kfair_dominating(g: Graph, s: VertexSetLike, k: int) -> bool:
    """Every vertex outside ``s`` has exactly ``k`` neighbours in ``s``; ``s = V`` qualifies vacuously."""
    _check_k(k)
    s = _as_subset(g, s)
    return kfd_mask(g.adjacency, g.full, s.mask, k)


def fairness_profile(g: Graph, s: VertexSetLike, k: int) -> FairnessProfile:
    _check_k(k)
    s = _as_subset(g, s)
    defects = {
        v: popcount(g.adjacency[v] & s.mask) - k
        for v in iter_bits(g.full & ~s.mask)
    }
    return FairnessProfile(k=k, members=s, defects=defects)


def excess_vertices(g: Graph, s: VertexSetLike, k: int) -> VertexSet:
    """Vertices outside ``s`` with more than ``k`` neighbours in ``s``.

    No superset of ``s`` that still excludes one of them can be k-fair.
    """
    _check_k(k)
    s = _as_subset(g, s)
    return VertexSet(mask=mask_of(
        v for v in iter_bits(g.full & ~s.mask) if popcount(g.adjacency[v] & s.mask) > k
    ))


def fair_level(g: Graph, s: VertexSetLike) -> Optional[int]:
    """The k >= 1 for which ``s`` is k-fair dominating, or None.

    ``s = V`` is k-fair for every k and reports 1.
    """
    s = _as_subset(g, s)
    counts = {popcount(g.adjacency[v] & s.mask) for v in iter_bits(g.full & ~s.mask)}
    if not counts:
        return 1
    if len(counts) == 1:
        (level,) = counts
        return level if level >= 1 else None
    return None


def is_minimal_kfd(g: Graph, s: VertexSetLike, k: int) -> bool:
    s = _as_subset(g, s)
    if not is_kfair_dominating(g, s, k):
        raise ValueError(f"{s} is not a {k}-fair dominating set")
    return not any(kfd_mask(g.adjacency, g.full, sub, k) for sub in proper_submasks(s.mask))


# ---------------------------------------------------------------------------
# Exhaustive searches
# ---------------------------------------------------------------------------

class DominationService:
    """Minimum sets, enumeration and the k-fair domatic number by exhaustive search.

    ``order_cap`` bounds the domatic search, which walks every fair subset of V.
    """

    def __init__(self, order_cap: Optional[int] = None):
        self.order_cap = order_cap if order_cap is not None else settings.SOLVER_ORDER_CAP

    def enumerate_kfd(self, g: Graph, k: int, max_size: Optional[int] = None) -> Iterator[VertexSet]:
        """k-fair dominating sets by increasing size, lexicographic within a size."""
        _check_k(k)
        top = g.n if max_size is None else min(max_size, g.n)
        for size in range(0, top + 1):
            for combo in combinations(range(g.n), size):
                mask = mask_of(combo)
                if kfd_mask(g.adjacency, g.full, mask, k):
                    yield VertexSet(mask=mask)

    def min_kfd_set(self, g: Graph, k: int) -> VertexSet:
        # V always qualifies, so the stream is never empty
        return next(self.enumerate_kfd(g, k))

    def gamma_kf(self, g: Graph, k: int) -> int:
        return len(self.min_kfd_set(g, k))

    def min_fd_set(self, g: Graph) -> VertexSet:
        """Smallest non-empty set that is k-fair dominating for some k >= 1."""
        for size in range(1, g.n + 1):
            for combo in combinations(range(g.n), size):
                if fair_level(g, mask_of(combo)) is not None:
                    return VertexSet.of(combo)
        raise ValueError("the empty graph has no fair dominating set")

    def gamma_f(self, g: Graph) -> int:
        if g.is_edgeless():
            return g.n
        return len(self.min_fd_set(g))

    def gamma(self, g: Graph) -> int:
        """Domination number."""
        for size in range(0, g.n + 1):
            for combo in combinations(range(g.n), size):
                mask = mask_of(combo)
                if all(g.adjacency[v] & mask for v in iter_bits(g.full & ~mask)):
                    return size
        return g.n

    def domatic_partition(self, g: Graph, k: int) -> list[VertexSet]:
        """A partition of V into the maximum number of k-fair dominating sets.

        Exact search; blocks are listed by minimum vertex and the first optimum met in
        lexicographic block order is returned.
        """
        _check_k(k)
        if g.n == 0:
            return []
        if g.n > self.order_cap:
            raise OrderCapExceeded(g.n, self.order_cap, what="domatic")

        adjacency, full = g.adjacency, g.full
        fair = [
            mask for mask in range(1, full + 1)
            if kfd_mask(adjacency, full, mask, k)
        ]
        smallest = min(popcount(mask) for mask in fair)
        fair.sort(key=lambda mask: tuple(iter_bits(mask)))

        best: list[int] = [full]

        def extend(remaining: int, placed: list[int]) -> None:
            nonlocal best
            if not remaining:
                if len(placed) > len(best):
                    best = list(placed)
                return
            if len(placed) + popcount(remaining) // smallest <= len(best):
                return
            low = remaining & -remaining
            for mask in fair:
                if mask & low and not mask & ~remaining:
                    placed.append(mask)
                    extend(remaining & ~mask, placed)
                    placed.pop()

        extend(full, [])
        logger.debug("d_%df search over %d fair sets for order %d gave %d", k, len(fair), g.n, len(best))
        return [VertexSet(mask=mask) for mask in sorted(best, key=lowest_bit)]

    def d_kf(self, g: Graph, k: int) -> int:
        return len(self.domatic_partition(g, k))

    def fair_report(self, g: Graph, k: int) -> FairReport:
        _check_k(k)
        if g.n == 0:
            raise ValueError("fair domination parameters need a graph with at least one vertex")
        fd = self.min_fd_set(g)
        kfd = self.min_kfd_set(g, k)
        domatic = self.domatic_partition(g, k)
        return FairReport(
            graph6=encode_graph6(g),
            n=g.n,
            k=k,
            gamma=self.gamma(g),
            gamma_kf=len(kfd),
            gamma_kf_witness=kfd,
            gamma_f=len(fd),
            gamma_f_witness=fd,
            gamma_f_level=fair_level(g, fd) if fd.mask != g.full else None,
            d_kf=len(domatic),
            domatic_witness=domatic,
        )
