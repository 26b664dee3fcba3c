"""Small-graph corpora: graph6 files, the networkx atlas (orders 0..7) and free trees."""

from pathlib import Path
from typing import Iterable, Iterator, Optional

import networkx as nx

from src.graphs.schemas import Graph
from src.ingestion.service import CorpusLine, IngestionService, encode_graph6

ATLAS_MAX_ORDER = 7


def atlas_graphs(
    min_order: int = 1,
    max_order: int = ATLAS_MAX_ORDER,
    regular: Optional[int] = None,
    connected: bool = False,
) -> Iterator[Graph]:
    """Every graph of order ``min_order..max_order`` (at most 7) up to isomorphism."""
    if max_order > ATLAS_MAX_ORDER:
        raise ValueError(f"the graph atlas stops at order {ATLAS_MAX_ORDER}")
    for nx_graph in nx.graph_atlas_g():
        n = nx_graph.number_of_nodes()
        if not min_order <= n <= max_order:
            continue
        g = Graph.from_networkx(nx_graph)
        if regular is not None and not g.is_regular(regular):
            continue
        if connected and not g.is_connected():
            continue
        yield g


def tree_graphs(min_order: int = 1, max_order: int = 9) -> Iterator[Graph]:
    """Every free tree of order ``min_order..max_order``."""
    for n in range(max(1, min_order), max_order + 1):
        if n == 1:
            yield Graph.from_edges(1, ())
            continue
        for tree in nx.nonisomorphic_trees(n):
            yield Graph.from_networkx(tree)


def as_corpus(graphs: Iterable[Graph]) -> list[CorpusLine]:
    return [
        CorpusLine(number, encode_graph6(g), g, None)
        for number, g in enumerate(graphs, start=1)
    ]


def corpus_from_file(path: Path) -> list[CorpusLine]:
    return IngestionService().load_corpus(path)
