"""Text, JSON and DOT rendering of command reports. JSON carries no timing."""

from typing import Callable, Optional

from pydantic import BaseModel

from src.cli.schemas import BoundsOutput, DotReport, SolveReport, ValidateReport
from src.coalitions.schemas import Bound, BoundsReport, Partition
from src.domination.schemas import FairReport
from src.graphs.schemas import VertexSet
from src.verification.schemas import CensusReport


def _set(s: VertexSet) -> str:
    return "{" + ", ".join(map(str, s.vertices())) + "}"


def _partition(p: Partition) -> str:
    return " / ".join(" ".join(map(str, block.vertices())) for block in p.blocks)


def _bound(b: Bound) -> str:
    safe = "" if b.search_safe else " (report only)"
    note = f": {b.note}" if b.note else ""
    return f"{b.value} [{b.source}]{safe}{note}"


def _bounds_lines(report: BoundsReport) -> list[str]:
    lines = [f"upper bound     {_bound(report.upper)}"]
    if report.lower is not None:
        lines.append(f"lower bound     {_bound(report.lower)}")
    lines += [f"  upper {_bound(b)}" for b in report.upper_candidates]
    lines += [f"  lower {_bound(b)}" for b in report.lower_candidates]
    return lines


def _solve_text(r: SolveReport) -> list[str]:
    lines = [f"graph           {r.graph6} (n={r.n})", f"k               {r.k}"]
    if r.outcome == "value":
        lines.append(f"C_{r.k}f            {r.c_kf}")
        lines.append(f"witness         {_partition(r.witness)}")
        partners = r.certificate.partners()
        for i in range(len(r.witness)):
            why = f"partner of block {partners[i]}" if i in partners else f"{r.k}-fair dominating, size {r.k}"
            lines.append(f"  block {i}: {_set(r.witness.blocks[i])} {why}")
    elif r.outcome == "no_partition":
        lines.append(f"C_{r.k}f            none (no {r.k}-fair coalition partition exists)")
    else:
        best = r.best_lower_bound if r.best_lower_bound is not None else "unknown"
        lines.append(f"C_{r.k}f            inconclusive (best lower bound {best})")
    lines.append(f"nodes           {r.nodes}")
    return lines + _bounds_lines(r.bounds)


def _validate_text(r: ValidateReport) -> list[str]:
    lines = [f"graph           {r.graph6}", f"k               {r.k}", f"partition       {_partition(r.partition)}"]
    if r.valid:
        partners = r.certificate.partners()
        lines.append("valid")
        for i in range(len(r.partition)):
            why = f"partner {partners[i]}" if i in partners else "standalone fair"
            lines.append(f"  block {i}: {why}")
    else:
        lines.append(f"invalid: block {r.violation.block} {_set(r.violation.members)}: {r.violation.message}")
    return lines


def _bounds_text(r: BoundsOutput) -> list[str]:
    return [
        f"graph           {r.graph6} (n={r.n}, δ={r.min_degree}, Δ={r.max_degree})",
        f"k               {r.bounds.k}",
        *_bounds_lines(r.bounds),
    ]


def _fair_text(r: FairReport) -> list[str]:
    level = f" (k={r.gamma_f_level})" if r.gamma_f_level is not None else ""
    return [
        f"graph           {r.graph6} (n={r.n})",
        f"γ               {r.gamma}",
        f"γ_{r.k}f            {r.gamma_kf} {_set(r.gamma_kf_witness)}",
        f"γ_f             {r.gamma_f} {_set(r.gamma_f_witness)}{level}",
        f"d_{r.k}f            {r.d_kf} " + " / ".join(_set(b) for b in r.domatic_witness),
    ]


def _census_text(r: CensusReport) -> list[str]:
    c = r.corpus
    orders = f", orders {c.min_order}..{c.max_order}" if c.min_order is not None else ""
    lines = [f"{r.title}: {c.source}, {c.graphs} graphs{orders}, k in {r.k_values}"]
    header = f"{'check':<24}{'pass':>7}{'fail':>7}{'skip':>7}{'disc':>7}{'inc':>7}"
    lines += [header, "-" * len(header)]
    for s in r.summary:
        lines.append(
            f"{s.check:<24}{s.passed:>7}{s.failed:>7}{s.skipped:>7}{s.discrepancies:>7}{s.inconclusive:>7}"
        )
    for record in r.records:
        if record.status in ("fail", "discrepancy", "inconclusive"):
            subject = record.subject or record.graph6
            lines.append(
                f"{record.status.upper():<13}{record.check} {subject} k={record.k} "
                f"observed={record.observed} bound={record.bound} {record.detail}".rstrip()
            )
    for e in r.parse_errors:
        lines.append(f"PARSE ERROR  line {e.line}, byte {e.offset}: {e.message}")
    lines.append("PASSED" if r.passed else "FAILED")
    return lines


TEXT_RENDERERS: dict[type, Callable[[BaseModel], list[str]]] = {
    SolveReport: _solve_text,
    ValidateReport: _validate_text,
    BoundsOutput: _bounds_text,
    FairReport: _fair_text,
    CensusReport: _census_text,
}


def render(report: BaseModel, fmt: str = "text", elapsed: Optional[float] = None) -> str:
    if fmt == "json":
        return report.model_dump_json(indent=2) + "\n"
    if isinstance(report, DotReport):
        return report.dot
    if fmt == "dot":
        raise ValueError("--format dot is only available for the dot command")
    lines = TEXT_RENDERERS[type(report)](report)
    if elapsed is not None:
        lines.append(f"time            {elapsed:.3f}s")
    return "\n".join(lines) + "\n"
