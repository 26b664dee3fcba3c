"""Upper and lower bounds on C_kf with provenance.

Only bounds derived directly from the definitions are ``search_safe`` and may seed the
exact search; the rest are reported and checked by the census.
"""

import logging
from typing import Optional

from src.coalitions.schemas import Bound, BoundsReport
from src.domination.service import DominationService
from src.graphs.schemas import Graph

logger = logging.getLogger(__name__)


def published_max_degree_bound(g: Graph, k: int) -> Optional[int]:
    """Δ - k + 3 for k > δ, exactly as published (fails when k >= Δ + 2)."""
    if k <= g.min_degree:
        return None
    return g.max_degree - k + 3


def singleton_split_applies(g: Graph, k: int) -> bool:
    """An all-singleton partition needs every pair union to be k-fair, forcing k <= 2 and δ >= n - 2."""
    return g.n >= 3 and (k >= 3 or (k == 2 and g.min_degree < g.n - 2))


def upper_candidates(g: Graph, k: int) -> list[Bound]:
    n, delta, big_delta = g.n, g.min_degree, g.max_degree
    out = [Bound(value=n, source="order", search_safe=True)]

    if k > delta:
        value = max(2, big_delta - k + 3)
        note = "" if k <= big_delta + 1 else f"published form gives {big_delta - k + 3}"
        out.append(Bound(value=value, source="max_degree", search_safe=True, note=note))

    if singleton_split_applies(g, k):
        out.append(Bound(value=n - 1, source="singleton_split", search_safe=True))

    if n >= 3 and g.is_regular(k):
        out.append(Bound(value=4, source="regular_range"))

    if k == 2 and n >= 2 and g.is_tree():
        out.append(Bound(value=n // 2 + 1, source="tree_half_order"))
        out.append(Bound(value=big_delta + 1, source="tree_max_degree"))

    if k == delta and big_delta >= delta + 1:
        out.append(Bound(value=2 * big_delta - 2 * delta + 4, source="min_degree_fairness"))
    return out


def lower_candidates(g: Graph, k: int, order_cap: Optional[int] = None) -> list[Bound]:
    out = []
    if k >= 2 and g.n >= 2 and g.is_connected():
        d = DominationService(order_cap).d_kf(g, k)
        out.append(Bound(value=2 * d, source="domatic"))
    if g.n >= 3 and g.is_regular(k):
        out.append(Bound(value=3, source="regular_range"))
    return out


def upper_bound(g: Graph, k: int) -> BoundsReport:
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    candidates = tuple(upper_candidates(g, k))
    return BoundsReport(k=k, upper=min(candidates, key=lambda b: b.value), upper_candidates=candidates)


def lower_bound(g: Graph, k: int, order_cap: Optional[int] = None) -> BoundsReport:
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    report = upper_bound(g, k)
    lowers = tuple(lower_candidates(g, k, order_cap=order_cap))
    lower = max(lowers, key=lambda b: b.value) if lowers else None
    return report.model_copy(update={"lower": lower, "lower_candidates": lowers})


def bounds(g: Graph, k: int, order_cap: Optional[int] = None) -> BoundsReport:
    """Both sides with provenance; ``order_cap`` bounds the domatic search behind the lower side."""
    return lower_bound(g, k, order_cap=order_cap)


def search_ceiling(g: Graph, k: int) -> int:
    return min(b.value for b in upper_candidates(g, k) if b.search_safe)
