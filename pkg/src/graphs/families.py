"""Named graph families and graph operations.

Every constructor returns an immutable :class:`Graph` on 0..n-1. Figures that
label vertices from 1 are shifted down by one.
"""

from itertools import combinations
from typing import Callable

from src.graphs.schemas import Graph


def build_path(n: int) -> Graph:
    if n < 1:
        raise ValueError("a path needs at least one vertex")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def build_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least three vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def build_complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("a complete graph needs at least one vertex")
    return Graph.from_edges(n, combinations(range(n), 2))


def build_complete_bipartite(s: int, t: int) -> Graph:
    """K_{s,t} with parts X = {0..s-1} and Y = {s..s+t-1}."""
    if s < 1 or t < 1:
        raise ValueError("both parts of a complete bipartite graph must be non-empty")
    return Graph.from_edges(s + t, ((x, s + y) for x in range(s) for y in range(t)))


def build_star(n: int) -> Graph:
    """K_{1,n-1} centred at vertex 0."""
    if n < 1:
        raise ValueError("a star needs at least one vertex")
    return Graph.from_edges(n, ((0, v) for v in range(1, n)))


def build_empty(n: int) -> Graph:
    if n < 1:
        raise ValueError("an edgeless graph needs at least one vertex")
    return Graph.from_edges(n, ())


def corona(g: Graph, l: int) -> Graph:
    """G∘K_l: vertex v keeps its label and is joined to its own copy of K_l.

    The copy attached to v occupies labels n + v*l .. n + v*l + l - 1.
    """
    if l < 1:
        raise ValueError("corona needs l >= 1")
    if g.n < 1:
        raise ValueError("corona of the empty graph is undefined")
    edges = list(g.edges())
    for v in range(g.n):
        copy = [g.n + v * l + j for j in range(l)]
        edges.extend((v, u) for u in copy)
        edges.extend(combinations(copy, 2))
    return Graph.from_edges(g.n * (l + 1), edges)


def complete_minus_perfect_matching(n: int) -> Graph:
    """K_n without the matching {0,1}, {2,3}, ...; (n-2)-regular."""
    if n < 2 or n % 2:
        raise ValueError("K_n minus a perfect matching needs an even n >= 2")
    return Graph.from_edges(n, ((u, v) for u, v in combinations(range(n), 2) if u // 2 != v // 2))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shifted = ((u + g.n, v + g.n) for u, v in h.edges())
    return Graph.from_edges(g.n + h.n, [*g.edges(), *shifted])


def _from_one_based(pairs: str) -> Graph:
    edges = [(int(p[0]) - 1, int(p[1]) - 1) for p in pairs.split()]
    return Graph.from_edges(6, edges)


def graph_g1() -> Graph:
    """The prism C_3 × K_2: triangles v1v2v3 and v4v5v6 joined by v1v4, v2v5, v3v6."""
    return _from_one_based("12 23 31 45 56 64 14 25 36")


def graph_g2() -> Graph:
    """The other cubic graph of order 6; bipartite with parts {v1, v5, v6} / {v2, v3, v4}."""
    return _from_one_based("12 13 35 45 26 64 14 25 36")


FAMILY_BUILDERS: dict[str, Callable[..., Graph]] = {
    "path": lambda n: build_path(n),
    "cycle": lambda n: build_cycle(n),
    "complete": lambda n: build_complete(n),
    "complete_bipartite": lambda s, t: build_complete_bipartite(s, t),
    "star": lambda n: build_star(n),
    "empty": lambda n: build_empty(n),
    "path_corona": lambda n, l=1: corona(build_path(n), l),
    "cycle_corona": lambda n, l=1: corona(build_cycle(n), l),
    "complete_minus_matching": lambda n: complete_minus_perfect_matching(n),
    "g1": lambda: graph_g1(),
    "g2": lambda: graph_g2(),
}


def build_family(name: str, **params: int) -> Graph:
    try:
        builder = FAMILY_BUILDERS[name]
    except KeyError:
        raise ValueError(f"unknown family {name!r}; choose from {sorted(FAMILY_BUILDERS)}")
    try:
        return builder(**params)
    except TypeError as e:
        raise ValueError(f"bad parameters for family {name!r}: {e}")
