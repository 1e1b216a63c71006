import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence

from app.models.algebra import BasisResponse, Envelope, SeriesResponse, TableResponse
from app.models.ideal import IdealResponse, SimplicityResponse, TraceEntryResponse
from app.services.generators import GeneratorSpec
from app.services.ideal_engine import IdealResult, SimplicityVerdict, Verdict, ideal_service
from app.services.lie_core import AlgebraElement, LieAlgebra
from app.services.rendering import format_element, format_set, format_table, format_trace

logger = logging.getLogger(__name__)


@dataclass
class Report:
    """Resultado de un comando: modelo JSON, traza opcional y líneas de texto."""
    command: str
    algebra: LieAlgebra
    result: object
    lines: List[str]
    trace: Optional[List[TraceEntryResponse]] = None
    verdict: Optional[Verdict] = None

    def envelope(self) -> Envelope:
        return Envelope(
            command=self.command,
            algebra=self.algebra.name,
            char=self.algebra.char,
            result=self.result.model_dump(),
            trace=[t.model_dump() for t in self.trace] if self.trace is not None else None,
        )


def _basis_response(elements: Sequence[AlgebraElement]) -> BasisResponse:
    return BasisResponse(
        basis=[e.to_json() for e in elements],
        basis_text=[format_element(e) for e in elements],
        dimension=len(elements),
    )


def _ideal_response(result: IdealResult, generator_texts: Sequence[str]) -> IdealResponse:
    return IdealResponse(
        generators=list(generator_texts),
        basis=[e.to_json() for e in result.basis],
        basis_text=[format_element(e) for e in result.basis],
        dimension=result.dimension,
    )


def _trace_response(result: IdealResult) -> List[TraceEntryResponse]:
    return [
        TraceEntryResponse(
            depth=entry.depth,
            dimension=entry.dimension,
            spanning_set=[e.to_json() for e in entry.spanning_set],
            text=format_set(entry.spanning_set),
        )
        for entry in result.trace
    ]


class ReportService:

    # -------------------------------------------------------------------------
    # TABLA DE MULTIPLICAR
    # -------------------------------------------------------------------------

    def table_report(self, L: LieAlgebra) -> Report:
        table = L.multiplication_table()
        response = TableResponse(
            dimension=L.dimension,
            structure_constants=[[e.to_json() for e in row] for row in table],
            entries=[[format_element(e) for e in row] for row in table],
        )
        return Report("table", L, response, format_table(L))

    # -------------------------------------------------------------------------
    # IDEAL GENERADO
    # -------------------------------------------------------------------------

    def ideal_report(self, L: LieAlgebra, gens: Sequence[GeneratorSpec]) -> Report:
        texts = [g.text for g in gens]
        result = ideal_service.ideal_generated(L, [g.element for g in gens])
        return Report(
            "ideal",
            L,
            _ideal_response(result, texts),
            format_trace(result, texts, L.char),
            trace=_trace_response(result),
        )

    # -------------------------------------------------------------------------
    # CENTRO, DERIVADA Y SERIES
    # -------------------------------------------------------------------------

    def center_report(self, L: LieAlgebra) -> Report:
        center = ideal_service.center(L)
        return Report("center", L, _basis_response(center), [format_set(center)])

    def derived_report(self, L: LieAlgebra) -> Report:
        result = ideal_service.derived_subalgebra(L)
        return Report(
            "derived",
            L,
            _ideal_response(result, []),
            [format_set(result.basis)],
            trace=_trace_response(result),
        )

    def series_report(self, L: LieAlgebra) -> Report:
        derived = ideal_service.derived_series(L)
        lower = ideal_service.lower_central_series(L)
        response = SeriesResponse(
            derived_dimensions=derived.dimensions,
            lower_central_dimensions=lower.dimensions,
            solvable=derived.reaches_zero,
            nilpotent=lower.reaches_zero,
            derived_terms=[[format_element(e) for e in t] for t in derived.terms],
            lower_central_terms=[[format_element(e) for e in t] for t in lower.terms],
        )
        lines = [
            "derived series: " + " > ".join(str(d) for d in derived.dimensions),
            "lower central series: " + " > ".join(str(d) for d in lower.dimensions),
            f"solvable: {'yes' if response.solvable else 'no'}",
            f"nilpotent: {'yes' if response.nilpotent else 'no'}",
        ]
        return Report("series", L, response, lines)

    # -------------------------------------------------------------------------
    # SIMPLICIDAD
    # -------------------------------------------------------------------------

    def simplicity_report(self, L: LieAlgebra, cap: Optional[int] = None, threads: Optional[int] = None) -> Report:
        verdict: SimplicityVerdict = ideal_service.is_simple(L, cap=cap, threads=threads)
        witness = None
        if verdict.witness is not None:
            gens = [format_element(verdict.witness_generator)] if verdict.witness_generator else []
            witness = _ideal_response(verdict.witness, gens)

        response = SimplicityResponse(
            verdict=verdict.verdict.value,
            reason=verdict.reason,
            candidates_tested=verdict.candidates_tested,
            witness=witness,
            witness_generator=verdict.witness_generator.to_json() if verdict.witness_generator else None,
            derived_dimension=verdict.derived_dimension,
            center=[e.to_json() for e in verdict.center],
        )

        if verdict.verdict == Verdict.SIMPLE:
            lines = [f"simple ({verdict.candidates_tested} candidates tested)"]
        elif verdict.verdict == Verdict.NOT_SIMPLE:
            lines = [f"not simple ({verdict.reason})"]
            if verdict.witness is not None:
                lines.append(
                    f"witness = {format_set(verdict.witness.basis)} "
                    f"with dimension = {verdict.witness.dimension}"
                )
            if verdict.witness_generator is not None:
                lines.append(f"generated by {format_element(verdict.witness_generator)}")
        else:
            lines = [
                f"inconclusive ({verdict.reason}, {verdict.candidates_tested} candidates tested)",
                f"derived dimension = {verdict.derived_dimension}",
                f"center = {format_set(verdict.center)}",
            ]

        return Report("simple", L, response, lines, verdict=verdict.verdict)


report_service = ReportService()
