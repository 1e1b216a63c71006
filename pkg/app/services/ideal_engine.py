"""
Ideal generado por una lista de elementos mediante clausura por corchetes
hasta un punto fijo, y herramientas derivadas: subálgebra derivada, centro,
series derivada y central descendente, prueba de simplicidad.
"""
from __future__ import annotations

import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, List, Optional, Sequence, Tuple

from app.config import settings
from app.services.lie_core import AlgebraElement, LieAlgebra
from app.services.linalg import CoordMatrix, in_span, null_space, rref

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TraceEntry:
    depth: int
    spanning_set: Tuple[AlgebraElement, ...]

    @property
    def dimension(self) -> int:
        return len(self.spanning_set)


@dataclass(frozen=True)
class IdealResult:
    basis: Tuple[AlgebraElement, ...]
    trace: Tuple[TraceEntry, ...]
    generators: Tuple[AlgebraElement, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def rows(self) -> CoordMatrix:
        return [e.coords for e in self.basis]


class Verdict(str, Enum):
    SIMPLE = "simple"
    NOT_SIMPLE = "not_simple"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class SimplicityVerdict:
    verdict: Verdict
    reason: str
    candidates_tested: int = 0
    witness: Optional[IdealResult] = None
    witness_generator: Optional[AlgebraElement] = None
    # resultados de los rechazos rápidos, si llegaron a calcularse
    derived_dimension: Optional[int] = None
    center: Tuple[AlgebraElement, ...] = ()


@dataclass(frozen=True)
class SeriesResult:
    kind: str
    terms: Tuple[Tuple[AlgebraElement, ...], ...] = field(default_factory=tuple)

    @property
    def dimensions(self) -> List[int]:
        return [len(t) for t in self.terms]

    @property
    def reaches_zero(self) -> bool:
        return bool(self.terms) and len(self.terms[-1]) == 0


def _canonical(L: LieAlgebra, elements: Sequence[AlgebraElement]) -> Tuple[AlgebraElement, ...]:
    return tuple(AlgebraElement(row, L.char) for row in rref([e.coords for e in elements]))


def projective_points(dimension: int, char: int) -> Iterator[Tuple[int, ...]]:
    """
    Un representante por punto proyectivo de F_p^n: primera coordenada no nula
    igual a 1, en orden lexicográfico de coordenadas.
    """
    for lead in reversed(range(dimension)):
        for tail in itertools.product(range(char), repeat=dimension - lead - 1):
            yield (0,) * lead + (1,) + tail


def projective_point_count(dimension: int, char: int) -> int:
    return (char ** dimension - 1) // (char - 1)


# Estado de cada proceso trabajador de la prueba de simplicidad
_worker_algebra: Optional[LieAlgebra] = None


def _init_worker(L: LieAlgebra) -> None:
    global _worker_algebra
    _worker_algebra = L


def _generated_dimension(coords: Tuple) -> int:
    L = _worker_algebra
    return ideal_service.ideal_generated(L, [AlgebraElement(coords, L.char)]).dimension


class IdealService:

    # -------------------------------------------------------------------------
    # IDEAL GENERADO
    # -------------------------------------------------------------------------

    def ideal_generated(self, L: LieAlgebra, gens: Sequence[AlgebraElement]) -> IdealResult:
        """
        Profundidad 0: RREF de los generadores. Cada ronda añade los corchetes
        de cada elemento del conjunto actual con cada vector de la base y vuelve
        a reducir. Se detiene al llegar a dimensión n o cuando la dimensión no
        cambia entre rondas.
        """
        for g in gens:
            L.check_member(g)

        n = L.dimension
        basis_vectors = L.basis_elements()
        current = _canonical(L, gens)
        trace = [TraceEntry(0, current)]
        logger.debug(f"Depth = 0 -> dimensión {len(current)}")

        if 0 < len(current) < n:
            depth = 0
            while True:
                depth += 1
                previous = len(current)
                spanning = list(current)
                for x in basis_vectors:
                    for b in current:
                        spanning.append(L.bracket(b, x))
                current = _canonical(L, spanning)
                trace.append(TraceEntry(depth, current))
                logger.debug(f"Depth = {depth} -> dimensión {len(current)}")
                if len(current) >= n or len(current) == previous:
                    break

        result = IdealResult(basis=current, trace=tuple(trace), generators=tuple(gens))
        logger.info(
            f"Ideal en '{L.name}' (char {L.char}): dimensión {result.dimension} "
            f"tras {len(trace) - 1} rondas"
        )
        return result

    def ideal_contains(self, result: IdealResult, e: AlgebraElement) -> bool:
        return in_span(e.coords, result.rows())

    # -------------------------------------------------------------------------
    # SUBÁLGEBRA DERIVADA Y CENTRO
    # -------------------------------------------------------------------------

    def derived_subalgebra(self, L: LieAlgebra) -> IdealResult:
        basis = L.basis_elements()
        gens = [
            L.bracket(basis[i], basis[j])
            for i in range(L.dimension)
            for j in range(i + 1, L.dimension)
        ]
        return self.ideal_generated(L, gens)

    def center(self, L: LieAlgebra) -> List[AlgebraElement]:
        """
        Núcleo del sistema [z, x_i] = 0 para todo i: fila (i, k) con
        coeficiente c_ji^k en la columna j.
        """
        n = L.dimension
        c = L.structure_constants
        system = [
            tuple(c[j][i][k] for j in range(n))
            for i in range(n)
            for k in range(n)
        ]
        return [AlgebraElement(row, L.char) for row in null_space(system, n, L.char)]

    # -------------------------------------------------------------------------
    # SERIES
    # -------------------------------------------------------------------------

    def _bracket_span(
        self, L: LieAlgebra, left: Sequence[AlgebraElement], right: Sequence[AlgebraElement]
    ) -> Tuple[AlgebraElement, ...]:
        return _canonical(L, [L.bracket(a, b) for a in left for b in right])

    def derived_series(self, L: LieAlgebra, max_terms: Optional[int] = None) -> SeriesResult:
        """L ⊇ [L,L] ⊇ [[L,L],[L,L]] ⊇ ... hasta estabilizarse."""
        terms = [tuple(L.basis_elements())]
        while max_terms is None or len(terms) < max_terms:
            nxt = self._bracket_span(L, terms[-1], terms[-1])
            if len(nxt) == len(terms[-1]):
                break
            terms.append(nxt)
        return SeriesResult(kind="derived", terms=tuple(terms))

    def lower_central_series(self, L: LieAlgebra, max_terms: Optional[int] = None) -> SeriesResult:
        """L ⊇ [L,L] ⊇ [L,[L,L]] ⊇ ... hasta estabilizarse."""
        full = L.basis_elements()
        terms = [tuple(full)]
        while max_terms is None or len(terms) < max_terms:
            nxt = self._bracket_span(L, full, terms[-1])
            if len(nxt) == len(terms[-1]):
                break
            terms.append(nxt)
        return SeriesResult(kind="lower_central", terms=tuple(terms))

    def is_solvable(self, L: LieAlgebra) -> bool:
        return self.derived_series(L).reaches_zero

    def is_nilpotent(self, L: LieAlgebra) -> bool:
        return self.lower_central_series(L).reaches_zero

    # -------------------------------------------------------------------------
    # SIMPLICIDAD
    # -------------------------------------------------------------------------

    def _first_proper(
        self,
        L: LieAlgebra,
        candidates: Iterator[AlgebraElement],
        threads: int,
    ) -> Tuple[int, Optional[AlgebraElement], Optional[IdealResult]]:
        """
        Recorre los candidatos en orden y devuelve el primero que genera un
        ideal propio. Con varios trabajadores se evalúa por lotes en procesos
        aparte y se reduce en orden, así el testigo es el mismo que en la
        ejecución secuencial.
        """
        tested = 0
        if threads <= 1:
            for e in candidates:
                tested += 1
                result = self.ideal_generated(L, [e])
                if result.dimension < L.dimension:
                    return tested, e, result
            return tested, None, None

        batch_size = max(settings.SIMPLE_BATCH_SIZE, threads)
        chunksize = max(1, batch_size // (4 * threads))
        with ProcessPoolExecutor(max_workers=threads, initializer=_init_worker, initargs=(L,)) as pool:
            while True:
                batch = list(itertools.islice(candidates, batch_size))
                if not batch:
                    return tested, None, None
                dims = pool.map(_generated_dimension, [e.coords for e in batch], chunksize=chunksize)
                for e, dim in zip(batch, dims):
                    tested += 1
                    if dim < L.dimension:
                        return tested, e, self.ideal_generated(L, [e])

    def is_simple(
        self,
        L: LieAlgebra,
        cap: Optional[int] = None,
        threads: Optional[int] = None,
    ) -> SimplicityVerdict:
        cap = cap if cap is not None else settings.DEFAULT_CAP
        threads = threads if threads is not None else settings.DEFAULT_THREADS
        n = L.dimension

        # Rechazos rápidos
        if L.is_abelian:
            witness = self.ideal_generated(L, [L.basis_element(0)]) if n > 1 else None
            return SimplicityVerdict(
                verdict=Verdict.NOT_SIMPLE,
                reason="abelian",
                witness=witness,
                witness_generator=L.basis_element(0) if n > 1 else None,
                derived_dimension=0,
            )

        derived = self.derived_subalgebra(L)
        if derived.dimension < n:
            return SimplicityVerdict(
                verdict=Verdict.NOT_SIMPLE,
                reason="derived_subalgebra_proper",
                witness=derived,
                derived_dimension=derived.dimension,
            )

        center = self.center(L)
        if center:
            return SimplicityVerdict(
                verdict=Verdict.NOT_SIMPLE,
                reason="nonzero_center",
                witness=self.ideal_generated(L, center),
                derived_dimension=derived.dimension,
                center=tuple(center),
            )

        exhaustive = not L.characteristic.is_zero and projective_point_count(n, L.char) <= cap
        if not exhaustive:
            # condición necesaria: las direcciones de la base generan todo L
            tested, gen, witness = self._first_proper(L, iter(L.basis_elements()), threads)
            if witness is not None:
                return SimplicityVerdict(
                    verdict=Verdict.NOT_SIMPLE,
                    reason="proper_ideal_found",
                    candidates_tested=tested,
                    witness=witness,
                    witness_generator=gen,
                    derived_dimension=n,
                )
            reason = "characteristic_zero" if L.characteristic.is_zero else "cap_exceeded"
            logger.warning(f"Simplicidad de '{L.name}' no concluyente ({reason})")
            return SimplicityVerdict(
                verdict=Verdict.INCONCLUSIVE,
                reason=reason,
                candidates_tested=tested,
                derived_dimension=n,
            )

        candidates = (L.element(p) for p in projective_points(n, L.char))
        tested, gen, witness = self._first_proper(L, candidates, threads)
        if witness is not None:
            return SimplicityVerdict(
                verdict=Verdict.NOT_SIMPLE,
                reason="proper_ideal_found",
                candidates_tested=tested,
                witness=witness,
                witness_generator=gen,
                derived_dimension=n,
            )
        logger.info(f"'{L.name}' es simple: {tested} puntos proyectivos generan todo el álgebra")
        return SimplicityVerdict(
            verdict=Verdict.SIMPLE,
            reason="all_points_generate",
            candidates_tested=tested,
            derived_dimension=n,
        )


ideal_service = IdealService()
