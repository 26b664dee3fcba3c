"""Explicit coalition partitions for the named families.

Labels follow the family builders: path and cycle vertices 0..n-1, the pendant of
vertex i in a K_1 corona is n + i, K_{s,t} has X = 0..s-1 and Y = s..s+t-1.
"""

from typing import Callable, Optional

from src.coalitions.schemas import Partition


def _complete(n: int, k: int) -> Optional[Partition]:
    if not 2 <= k <= n - 1:
        return None
    return Partition.from_blocks([range(k - 1), *([v] for v in range(k - 1, n))])


def _path(n: int, k: int) -> Optional[Partition]:
    if k != 2 or n < 2:
        return None
    if n == 2:
        return Partition.from_blocks([[0], [1]])
    if n == 3:
        return Partition.from_blocks([[0], [1, 2]])
    return Partition.from_blocks([[0, *range(3, n)], [1], [2]])


def _cycle(n: int, k: int) -> Optional[Partition]:
    if k != 2 or n < 3:
        return None
    if n % 2:
        return Partition.from_blocks([range(n - 2), [n - 2], [n - 1]])
    return Partition.from_blocks([range(r, n, 4) for r in range(4) if r < n])


def _path_corona(n: int, k: int, l: int = 1) -> Optional[Partition]:
    if k != 2 or l != 1:
        return None
    pendants = list(range(n, 2 * n))
    if n >= 6:
        return Partition.from_blocks([[*pendants, 0, *range(5, n)], [1, 2], [3, 4]])
    if n == 4:
        return Partition.from_blocks([[0, 3], [1, 2], pendants])
    if n in (1, 3, 5):
        # the first pendant against everything else
        return Partition.from_blocks([[n], [v for v in range(2 * n) if v != n]])
    return None


def _cycle_corona(n: int, k: int, l: int = 1) -> Optional[Partition]:
    if k != 2 or l != 1 or n < 3:
        return None
    pendants = list(range(n, 2 * n))
    if n == 3:
        return Partition.from_blocks([pendants, [0], [1], [2]])
    return Partition.from_blocks([[*pendants, *range(4, n)], [0, 1], [2, 3]])


def _complete_bipartite(s: int, t: int, k: int) -> Optional[Partition]:
    if not (k == s == t and k >= 2):
        return None
    return Partition.from_blocks([[0], range(1, s), [s], range(s + 1, s + t)])


def _complete_minus_matching(n: int, k: int) -> Optional[Partition]:
    if k != 2:
        return None
    return Partition.from_blocks([[v] for v in range(n)])


def _g1(k: int) -> Optional[Partition]:
    # one triangle as singletons, the other triangle as one block
    return Partition.from_blocks([[0], [1], [2], [3, 4, 5]]) if k == 2 else None


def _g2(k: int) -> Optional[Partition]:
    return Partition.from_blocks([[0, 3], [2, 4], [1, 5]]) if k == 2 else None


KNOWN_WITNESSES: dict[str, Callable[..., Optional[Partition]]] = {
    "complete": _complete,
    "path": _path,
    "cycle": _cycle,
    "path_corona": _path_corona,
    "cycle_corona": _cycle_corona,
    "complete_bipartite": _complete_bipartite,
    "complete_minus_matching": _complete_minus_matching,
    "g1": _g1,
    "g2": _g2,
}


def known_witness(family: str, params: dict[str, int], k: int) -> Optional[Partition]:
    """The explicit construction for ``family`` at ``params`` and ``k``, if one is known."""
    builder = KNOWN_WITNESSES.get(family)
    if builder is None:
        return None
    return builder(k=k, **params)
