from enum import IntEnum
from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator

from src.coalitions.schemas import BoundsReport, Partition, PartitionCertificate, Violation
from src.config import settings
from src.graphs.families import build_family
from src.graphs.schemas import Graph
from src.shared.models import ReportModel
from src.ingestion.service import IngestionService, parse_graph6

Command = Literal["solve", "validate", "bounds", "verify", "census", "extremal", "dot", "fair", "schema"]
OutputFormat = Literal["json", "text", "dot"]

# commands that act on a single graph
GRAPH_COMMANDS = frozenset({"solve", "validate", "bounds", "dot", "fair"})


class ExitCode(IntEnum):
    OK = 0
    FAILED = 1
    INPUT = 2
    NO_PARTITION = 3
    INCONCLUSIVE = 4
    INVALID_PARTITION = 5


class RunConfig(BaseModel):
    """Parsed command line; graph-source and cap rules are enforced here."""

    command: Command
    family: Optional[str] = None
    n: Optional[int] = Field(None, ge=0)
    s: Optional[int] = Field(None, ge=0)
    t: Optional[int] = Field(None, ge=0)
    l: Optional[int] = Field(None, ge=1)
    g6: Optional[str] = None
    edge_list: Optional[Path] = None
    k: list[int] = Field(default_factory=lambda: [2])
    workers: int = Field(1, ge=1)
    budget: Optional[int] = Field(None, ge=1)
    order_cap: Optional[int] = Field(None, ge=1)
    allow_large: bool = False
    format: OutputFormat = "text"
    partition: Optional[Path] = None
    max_order: Optional[int] = Field(None, ge=1)
    atlas: bool = False
    corpus: Optional[Path] = None
    checks: Optional[list[str]] = None
    regular: Optional[int] = Field(None, ge=0)
    progress: Optional[bool] = None
    model: Optional[str] = None

    @model_validator(mode="after")
    def _check_sources(self) -> "RunConfig":
        if any(k < 1 for k in self.k):
            raise ValueError("k must be a positive integer")
        if self.command in GRAPH_COMMANDS:
            sources = [self.family is not None, self.g6 is not None, self.edge_list is not None]
            if sum(sources) != 1:
                raise ValueError("give exactly one graph source: --family, --g6 or --edge-list")
            if len(self.k) != 1:
                raise ValueError(f"{self.command} takes a single k")
        if self.command in ("validate", "dot") and self.partition is None:
            raise ValueError(f"{self.command} needs --partition")
        if self.command == "census" and self.atlas == (self.corpus is not None):
            raise ValueError("census needs exactly one of --atlas or a corpus file")
        if self.order_cap is not None and self.order_cap > settings.SOLVER_ORDER_CAP and not self.allow_large:
            raise ValueError(
                f"--order-cap {self.order_cap} is above the configured cap {settings.SOLVER_ORDER_CAP}; "
                "pass --allow-large to confirm"
            )
        return self

    @property
    def single_k(self) -> int:
        return self.k[0]

    def family_params(self) -> dict[str, int]:
        names = ("n", "s", "t", "l")
        return {name: getattr(self, name) for name in names if getattr(self, name) is not None}

    def graph(self) -> Graph:
        if self.family is not None:
            return build_family(self.family, **self.family_params())
        if self.g6 is not None:
            return parse_graph6(self.g6)
        return IngestionService().load_graph(self.edge_list)


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------

class SolveReport(ReportModel):
    graph6: str
    n: int
    k: int
    outcome: Literal["value", "no_partition", "inconclusive"]
    c_kf: Optional[int] = None
    witness: Optional[Partition] = None
    certificate: Optional[PartitionCertificate] = None
    nodes: int = 0
    best_lower_bound: Optional[int] = None
    bounds: BoundsReport


class ValidateReport(ReportModel):
    graph6: str
    k: int
    partition: Partition
    valid: bool
    certificate: Optional[PartitionCertificate] = None
    violation: Optional[Violation] = None


class BoundsOutput(ReportModel):
    graph6: str
    n: int
    min_degree: int
    max_degree: int
    bounds: BoundsReport


class DotReport(ReportModel):
    graph6: str
    k: int
    blocks: int
    coalitions: int
    dot: str
