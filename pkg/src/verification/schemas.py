from typing import Annotated, Literal, Optional, Union, get_args

from pydantic import Field

from src.coalitions.schemas import Partition
from src.graphs.schemas import VertexSet
from src.shared.models import FrozenModel, ReportModel

ClosedFormFamily = Literal[
    "complete",
    "complete_bipartite",
    "path",
    "cycle",
    "path_corona_k1",
    "cycle_corona_k1",
    "cubic_order6_g1",
    "cubic_order6_g2",
]

CheckStatus = Literal["pass", "fail", "skipped", "discrepancy", "inconclusive"]

CensusCheck = Literal[
    "oracle_agreement",
    "max_degree_bound",
    "partner_limit",
    "domatic_lower_bound",
    "half_domatic",
    "regular_range",
    "tree_half_order",
    "tree_max_degree",
    "min_degree_fairness",
    "fair_set_size",
    "singleton_split",
    "domination_chain",
    "tree_fair_domination",
]

ALL_CENSUS_CHECKS: tuple[str, ...] = get_args(CensusCheck)


class ExactValue(FrozenModel):
    kind: Literal["exact"] = "exact"
    value: int


class UpperBoundOnly(FrozenModel):
    kind: Literal["upper"] = "upper"
    bound: int


class KnownDiscrepancy(FrozenModel):
    kind: Literal["discrepancy"] = "discrepancy"
    published_value: int
    strict_value: Optional[int] = Field(None, description="Value under the strict definition; None means no partition exists")


Expectation = Annotated[Union[ExactValue, UpperBoundOnly, KnownDiscrepancy], Field(discriminator="kind")]


class ClosedForm(FrozenModel):
    family: ClosedFormFamily
    params: dict[str, int] = Field(default_factory=dict)
    k: int
    expected: Expectation
    disputed: bool = Field(False, description="Published value is contradicted elsewhere; mismatches are findings, not failures")
    statement: str = ""

    @property
    def label(self) -> str:
        args = ", ".join(f"{key}={value}" for key, value in self.params.items())
        return f"{self.family}({args}), k={self.k}"


class ReplayWitness(FrozenModel):
    """Enough to re-evaluate a reported violation from scratch."""

    graph6: str
    k: int
    comparison: Literal[
        "size_above", "size_below", "partner_count_above", "domatic_above", "precedes", "recompute"
    ]
    limit: int = 0
    factor: int = 1
    partition: Optional[Partition] = None
    vertex_set: Optional[VertexSet] = None
    block: Optional[int] = None
    reference: Optional[Partition] = None


class CheckRecord(FrozenModel):
    graph6: str
    subject: str = ""
    n: int
    k: int
    check: str
    status: CheckStatus
    observed: Optional[int] = None
    bound: Optional[int] = None
    detail: str = ""
    witness: Optional[ReplayWitness] = None


class ParseFailure(FrozenModel):
    line: int
    offset: int
    message: str


class CorpusDescriptor(FrozenModel):
    source: str
    graphs: int
    min_order: Optional[int] = None
    max_order: Optional[int] = None
    regular: Optional[int] = None


class CheckSummary(FrozenModel):
    check: str
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    discrepancies: int = 0
    inconclusive: int = 0


class CensusReport(ReportModel):
    title: str
    corpus: CorpusDescriptor
    k_values: list[int]
    records: list[CheckRecord]
    parse_errors: list[ParseFailure] = Field(default_factory=list)
    summary: list[CheckSummary] = Field(default_factory=list)
    passed: bool

    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if r.status == "fail"]

    def with_status(self, status: CheckStatus) -> list[CheckRecord]:
        return [r for r in self.records if r.status == status]
