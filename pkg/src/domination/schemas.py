from typing import Optional

from pydantic import Field

from src.graphs.schemas import VertexSet
from src.shared.models import FrozenModel, ReportModel


class FairnessProfile(FrozenModel):
    """Per-vertex defect of a candidate set: |N(v) ∩ S| - k for every v outside S."""

    k: int = Field(..., ge=1)
    members: VertexSet
    defects: dict[int, int] = Field(default_factory=dict)

    @property
    def is_fair(self) -> bool:
        return all(d == 0 for d in self.defects.values())

    @property
    def excess(self) -> tuple[int, ...]:
        return tuple(v for v, d in sorted(self.defects.items()) if d > 0)

    @property
    def deficient(self) -> tuple[int, ...]:
        return tuple(v for v, d in sorted(self.defects.items()) if d < 0)


class FairReport(ReportModel):
    graph6: str
    n: int
    k: int
    gamma: int = Field(..., description="Domination number")
    gamma_kf: int
    gamma_kf_witness: VertexSet
    gamma_f: int
    gamma_f_witness: VertexSet
    gamma_f_level: Optional[int] = Field(None, description="A k for which the γ_f witness is k-fair; absent when it is V")
    d_kf: int
    domatic_witness: list[VertexSet]
