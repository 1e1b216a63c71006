"""
Álgebra lineal densa y exacta sobre Scalar: forma escalonada reducida (RREF),
rango, pertenencia a un span, núcleo y filtrado de filas nulas.
"""
from __future__ import annotations

import itertools
import logging
from typing import Iterator, List, Optional, Sequence, Tuple

from app.exceptions import DimensionMismatchError, RaggedMatrixError
from app.services.scalar_field import Characteristic, Scalar

logger = logging.getLogger(__name__)

CoordVector = Tuple[Scalar, ...]
CoordMatrix = List[CoordVector]


def _width(m: Sequence[Sequence[Scalar]]) -> int:
    if not m:
        return 0
    width = len(m[0])
    for idx, row in enumerate(m):
        if len(row) != width:
            raise RaggedMatrixError(
                f"Fila {idx} de longitud {len(row)}; se esperaba {width}"
            )
    return width


def is_zero_vector(v: Sequence[Scalar]) -> bool:
    return all(x.is_zero for x in v)


def zero_vector(width: int, char: int) -> CoordVector:
    return tuple(Scalar(0, char) for _ in range(width))


def unit_vector(width: int, index: int, char: int) -> CoordVector:
    return tuple(Scalar(int(i == index), char) for i in range(width))


def identity(width: int, char: int) -> CoordMatrix:
    return [unit_vector(width, i, char) for i in range(width)]


def pivot_of(row: Sequence[Scalar]) -> Optional[int]:
    for idx, x in enumerate(row):
        if not x.is_zero:
            return idx
    return None


def drop_zero_rows(m: Sequence[Sequence[Scalar]]) -> CoordMatrix:
    """Conserva, en orden, las filas que no son idénticamente nulas."""
    return [tuple(row) for row in m if not is_zero_vector(row)]


def rref_with_pivots(m: Sequence[Sequence[Scalar]]) -> Tuple[CoordMatrix, List[int]]:
    """
    Eliminación de Gauss-Jordan sin heurísticas de pivoteo: el pivote es la
    primera entrada no nula por columnas. Devuelve solo las filas no nulas y
    la lista de columnas pivote.
    """
    width = _width(m)
    rows = [list(row) for row in m]
    pivots: List[int] = []
    pivot_row = 0

    for col in range(width):
        if pivot_row == len(rows):
            break
        found = next((r for r in range(pivot_row, len(rows)) if not rows[r][col].is_zero), None)
        if found is None:
            continue
        rows[pivot_row], rows[found] = rows[found], rows[pivot_row]

        inv = rows[pivot_row][col].inverse()
        pivot = [x * inv for x in rows[pivot_row]]
        rows[pivot_row] = pivot

        for r in range(len(rows)):
            if r == pivot_row:
                continue
            factor = rows[r][col]
            if factor.is_zero:
                continue
            rows[r] = [x - factor * y for x, y in zip(rows[r], pivot)]

        pivots.append(col)
        pivot_row += 1

    return [tuple(row) for row in rows[:pivot_row]], pivots


def rref(m: Sequence[Sequence[Scalar]]) -> CoordMatrix:
    """Forma escalonada reducida; las filas nulas se descartan."""
    return rref_with_pivots(m)[0]


def rank(m: Sequence[Sequence[Scalar]]) -> int:
    return len(rref(m))


def _reduce_against(v: Sequence[Scalar], basis: Sequence[Sequence[Scalar]]) -> List[Scalar]:
    residual = list(v)
    for row in basis:
        col = pivot_of(row)
        if col is None:
            continue
        factor = residual[col]
        if factor.is_zero:
            continue
        residual = [x - factor * y for x, y in zip(residual, row)]
    return residual


def in_span(v: Sequence[Scalar], basis: Sequence[Sequence[Scalar]]) -> bool:
    """
    True si v es combinación lineal de las filas de `basis`.
    `basis` debe venir en RREF (p. ej. salida de rref()).
    """
    width = _width(basis)
    if basis and len(v) != width:
        raise DimensionMismatchError(f"Vector de longitud {len(v)} contra base de ancho {width}")
    return is_zero_vector(_reduce_against(v, basis))


def null_space(m: Sequence[Sequence[Scalar]], width: int, char: int) -> CoordMatrix:
    """Base RREF de {v : m·v = 0}, con v de longitud `width`."""
    if m and _width(m) != width:
        raise DimensionMismatchError(f"La matriz no tiene {width} columnas")
    reduced, pivots = rref_with_pivots(m)
    free = [c for c in range(width) if c not in pivots]
    vectors = []
    for f in free:
        v = [Scalar(0, char) for _ in range(width)]
        v[f] = Scalar(1, char)
        for row, c in zip(reduced, pivots):
            v[c] = -row[f]
        vectors.append(tuple(v))
    return rref(vectors)


class IncrementalBasis:
    """Forma escalonada que crece fila a fila; detecta dependencias al vuelo."""

    def __init__(self, width: int):
        self.width = width
        self.rows: CoordMatrix = []

    def add(self, v: Sequence[Scalar]) -> bool:
        """Añade v si es independiente; devuelve False si ya estaba en el span."""
        if len(v) != self.width:
            raise DimensionMismatchError(f"Vector de longitud {len(v)}; se esperaba {self.width}")
        residual = _reduce_against(v, self.rows)
        col = pivot_of(residual)
        if col is None:
            return False
        inv = residual[col].inverse()
        self.rows.append(tuple(x * inv for x in residual))
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)


class SpanSolver:
    """
    Coordenadas respecto de una lista de filas independientes.
    Se reduce [B | I] una sola vez; cada consulta es una sustitución.
    """

    def __init__(self, basis: Sequence[Sequence[Scalar]], char: int):
        self.width = _width(basis)
        self.size = len(basis)
        self.char = char
        augmented = [
            tuple(row) + unit_vector(self.size, i, char) for i, row in enumerate(basis)
        ]
        reduced, pivots = rref_with_pivots(augmented)
        self._rows = []
        for row, col in zip(reduced, pivots):
            if col >= self.width:
                # la parte izquierda se anuló: filas dependientes
                break
            self._rows.append((col, row[: self.width], row[self.width:]))
        self.rank = len(self._rows)

    def express(self, v: Sequence[Scalar]) -> Optional[CoordVector]:
        if len(v) != self.width:
            raise DimensionMismatchError(f"Vector de longitud {len(v)}; se esperaba {self.width}")
        residual = list(v)
        coeffs = [Scalar(0, self.char) for _ in range(self.size)]
        for col, left, right in self._rows:
            factor = residual[col]
            if factor.is_zero:
                continue
            residual = [x - factor * y for x, y in zip(residual, left)]
            coeffs = [c + factor * t for c, t in zip(coeffs, right)]
        if not is_zero_vector(residual):
            return None
        return tuple(coeffs)


def express(v: Sequence[Scalar], basis: Sequence[Sequence[Scalar]], char: int) -> Optional[CoordVector]:
    return SpanSolver(basis, char).express(v)


def span_elements(
    basis: Sequence[Sequence[Scalar]], char: Characteristic, width: Optional[int] = None
) -> Iterator[CoordVector]:
    """Todos los vectores del span sobre F_p (|span| = p^k)."""
    width = _width(basis) if basis else (width or 0)
    scalars = list(char.elements())
    for combo in itertools.product(scalars, repeat=len(basis)):
        v = [char.zero() for _ in range(width)]
        for c, row in zip(combo, basis):
            if c.is_zero:
                continue
            v = [x + c * y for x, y in zip(v, row)]
        yield tuple(v)


def enumerate_subspaces(width: int, char: Characteristic) -> Iterator[CoordMatrix]:
    """
    Todos los subespacios de F_p^width, cada uno por su matriz RREF.
    Se recorren los conjuntos de columnas pivote y se rellenan libremente las
    posiciones no pivote a la derecha de cada pivote.
    """
    scalars = list(char.elements())
    zero, one = char.zero(), char.one()
    for k in range(width + 1):
        for pivots in itertools.combinations(range(width), k):
            free_slots = [
                (r, c)
                for r, p in enumerate(pivots)
                for c in range(p + 1, width)
                if c not in pivots
            ]
            for values in itertools.product(scalars, repeat=len(free_slots)):
                rows = [[zero] * width for _ in range(k)]
                for r, p in enumerate(pivots):
                    rows[r][p] = one
                for (r, c), x in zip(free_slots, values):
                    rows[r][c] = x
                yield [tuple(row) for row in rows]
