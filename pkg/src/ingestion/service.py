"""Graph and partition ingestion: graph6, plain edge lists, partition block files, corpora."""

import logging
import re
from pathlib import Path
from typing import Iterable, Iterator, NamedTuple, Optional, Union

import networkx as nx

from src.coalitions.schemas import Partition
from src.exceptions import GraphParseError
from src.graphs.schemas import Graph, VertexSet

logger = logging.getLogger(__name__)

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_MAX_ORDER = 62
_TOKEN = re.compile(r"\S+")


class CorpusLine(NamedTuple):
    number: int
    text: str
    graph: Optional[Graph]
    error: Optional[GraphParseError]


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------

def parse_graph6(line: Union[str, bytes]) -> Graph:
    """Decode one graph6 string (short form, order <= 62)."""
    if isinstance(line, bytes):
        try:
            line = line.decode("ascii")
        except UnicodeDecodeError as e:
            raise GraphParseError("graph6 text must be ASCII", offset=e.start)
    text = line.rstrip("\r\n")
    start = 0
    if text.startswith(GRAPH6_HEADER):
        start = len(GRAPH6_HEADER)
    body = text[start:]
    if not body:
        raise GraphParseError("empty graph6 string", offset=start)

    for i, ch in enumerate(body):
        if not 63 <= ord(ch) <= 126:
            raise GraphParseError(f"byte {ch!r} outside the graph6 range 63..126", offset=start + i)

    n = ord(body[0]) - 63
    if n > GRAPH6_MAX_ORDER:
        raise GraphParseError(f"order field needs the long form; only n <= {GRAPH6_MAX_ORDER} is supported", offset=start)

    bits = n * (n - 1) // 2
    expected = 1 + (bits + 5) // 6
    if len(body) != expected:
        where = start + min(len(body), expected)
        raise GraphParseError(
            f"graph6 string for order {n} needs {expected} bytes, got {len(body)}",
            offset=where,
        )
    pad = 6 * (expected - 1) - bits
    if pad and (ord(body[-1]) - 63) & ((1 << pad) - 1):
        raise GraphParseError("non-zero padding bits", offset=start + expected - 1)

    decoded = nx.from_graph6_bytes(body.encode("ascii"))
    return Graph.from_networkx(decoded)


def encode_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_ORDER:
        raise ValueError(f"graph6 short form holds at most {GRAPH6_MAX_ORDER} vertices")
    return nx.to_graph6_bytes(g.to_networkx(), header=False).decode("ascii").strip()


# ---------------------------------------------------------------------------
# Plain edge lists: "n" followed by "u v" pairs
# ---------------------------------------------------------------------------

def _int_token(match: re.Match) -> int:
    try:
        value = int(match.group())
    except ValueError:
        raise GraphParseError(f"expected an integer, got {match.group()!r}", offset=match.start())
    if value < 0:
        raise GraphParseError(f"negative value {value}", offset=match.start())
    return value


def parse_edge_list(text: str) -> Graph:
    tokens = list(_TOKEN.finditer(text))
    if not tokens:
        raise GraphParseError("missing vertex count", offset=0)
    n = _int_token(tokens[0])
    if n > GRAPH6_MAX_ORDER:
        raise GraphParseError(f"order {n} exceeds the ingestion cap {GRAPH6_MAX_ORDER}", offset=tokens[0].start())
    rest = tokens[1:]
    if len(rest) % 2:
        raise GraphParseError("dangling vertex without a partner", offset=rest[-1].start())

    edges = []
    for a, b in zip(rest[::2], rest[1::2]):
        u, v = _int_token(a), _int_token(b)
        for token, value in ((a, u), (b, v)):
            if value >= n:
                raise GraphParseError(f"vertex {value} out of range for order {n}", offset=token.start())
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", offset=a.start())
        edges.append((u, v))
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# Corpora
# ---------------------------------------------------------------------------

def read_corpus(lines: Iterable[Union[str, bytes]]) -> Iterator[CorpusLine]:
    """Yield one entry per graph6 line; malformed lines carry their positioned error."""
    for number, raw in enumerate(lines, start=1):
        if isinstance(raw, bytes):
            raw = raw.decode("ascii", errors="replace")
        text = raw.strip()
        if not text or text == GRAPH6_HEADER:
            continue
        try:
            yield CorpusLine(number, text, parse_graph6(text), None)
        except GraphParseError as e:
            error = GraphParseError(e.reason, offset=e.offset, line=number)
            logger.warning("skipping corpus line %d: %s", number, error)
            yield CorpusLine(number, text, None, error)


# ---------------------------------------------------------------------------
# Partition block files
# ---------------------------------------------------------------------------

def parse_partition(text: str) -> Partition:
    """One block per line (or blocks separated by ``/``), vertex ids separated by whitespace."""
    blocks = []
    offset = 0
    for raw_line in text.splitlines(keepends=True):
        line = raw_line.split("#", 1)[0]
        for chunk_match in re.finditer(r"[^/]+", line):
            chunk = chunk_match.group()
            if not chunk.strip():
                continue
            vertices = []
            for token in _TOKEN.finditer(chunk):
                try:
                    vertices.append(int(token.group()))
                except ValueError:
                    raise GraphParseError(
                        f"expected a vertex id, got {token.group()!r}",
                        offset=offset + chunk_match.start() + token.start(),
                    )
                if vertices[-1] < 0:
                    raise GraphParseError(
                        f"negative vertex id {vertices[-1]}",
                        offset=offset + chunk_match.start() + token.start(),
                    )
                if vertices[-1] in vertices[:-1]:
                    raise GraphParseError(
                        f"vertex {vertices[-1]} repeated within one block",
                        offset=offset + chunk_match.start() + token.start(),
                    )
            blocks.append(VertexSet.of(vertices))
        offset += len(raw_line)
    if not blocks:
        raise GraphParseError("partition file lists no blocks", offset=0)
    return Partition(blocks=tuple(blocks))


def format_partition(partition: Partition) -> str:
    return "\n".join(" ".join(map(str, block.vertices())) for block in partition.blocks) + "\n"


# ---------------------------------------------------------------------------
# Files
# ---------------------------------------------------------------------------

class IngestionService:
    """Graphs, corpora and partitions read from disk."""

    GRAPH6_SUFFIXES = (".g6", ".graph6")

    def __init__(self, encoding: str = "ascii"):
        self.encoding = encoding

    def _read(self, path: Path) -> str:
        return Path(path).read_text(encoding=self.encoding, errors="replace")

    def load_graph(self, path: Path, fmt: str = "auto") -> Graph:
        """Read a graph file; ``fmt`` is ``graph6``, ``edges`` or ``auto`` (by suffix)."""
        text = self._read(path)
        if fmt == "auto":
            fmt = "graph6" if Path(path).suffix in self.GRAPH6_SUFFIXES else "edges"
        if fmt == "graph6":
            lines = [ln for ln in text.splitlines() if ln.strip()]
            if len(lines) != 1:
                raise GraphParseError(f"expected exactly one graph6 line, found {len(lines)}", offset=0)
            return parse_graph6(lines[0].strip())
        return parse_edge_list(text)

    def load_corpus(self, path: Path) -> list[CorpusLine]:
        lines = list(read_corpus(self._read(path).splitlines()))
        bad = sum(1 for line in lines if line.error is not None)
        logger.info("read %d corpus lines from %s (%d malformed)", len(lines), path, bad)
        return lines

    def load_partition(self, path: Path) -> Partition:
        return parse_partition(self._read(path))
