"""
El álgebra de Lie: base ordenada de matrices, corchete, coordenadas,
reconstrucción, constantes de estructura y tabla de multiplicar.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from app.exceptions import (
    CharacteristicMismatchError,
    ClosureError,
    DimensionMismatchError,
    ForeignElementError,
    IndependenceError,
    InvalidAlgebraError,
    NotInSpanError,
    StructureConstantsError,
)
from app.services.linalg import (
    CoordVector,
    IncrementalBasis,
    SpanSolver,
    is_zero_vector,
    unit_vector,
    zero_vector,
)
from app.services.scalar_field import Characteristic, RawValue, Scalar

logger = logging.getLogger(__name__)


# -----------------------------------------------------------------------------
# Matrices
# -----------------------------------------------------------------------------

@dataclass(frozen=True)
class MatrixRep:
    entries: Tuple[Tuple[Scalar, ...], ...]
    char: int

    def __post_init__(self):
        size = len(self.entries)
        for row in self.entries:
            if len(row) != size:
                raise DimensionMismatchError("La matriz debe ser cuadrada")
            for x in row:
                if x.char != self.char:
                    raise CharacteristicMismatchError(
                        f"Entrada de característica {x.char} en matriz de característica {self.char}"
                    )

    @classmethod
    def from_integers(cls, rows: Sequence[Sequence[RawValue]], char: Characteristic) -> "MatrixRep":
        """Reduce una matriz de enteros a la característica dada."""
        return cls(tuple(tuple(char.scalar(x) for x in row) for row in rows), char.value)

    @classmethod
    def zero(cls, size: int, char: int) -> "MatrixRep":
        return cls(tuple(zero_vector(size, char) for _ in range(size)), char)

    @classmethod
    def elementary(cls, size: int, i: int, j: int, char: int) -> "MatrixRep":
        """E_ij con índices base 0."""
        return cls(
            tuple(
                tuple(Scalar(int(r == i and c == j), char) for c in range(size))
                for r in range(size)
            ),
            char,
        )

    @property
    def size(self) -> int:
        return len(self.entries)

    def _check_compatible(self, other: "MatrixRep") -> None:
        if other.size != self.size:
            raise DimensionMismatchError(f"Tamaños incompatibles: {self.size} y {other.size}")
        if other.char != self.char:
            raise CharacteristicMismatchError(
                f"Características incompatibles: {self.char} y {other.char}"
            )

    def __add__(self, other: "MatrixRep") -> "MatrixRep":
        self._check_compatible(other)
        return MatrixRep(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)),
            self.char,
        )

    def __sub__(self, other: "MatrixRep") -> "MatrixRep":
        self._check_compatible(other)
        return MatrixRep(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)),
            self.char,
        )

    def __matmul__(self, other: "MatrixRep") -> "MatrixRep":
        self._check_compatible(other)
        columns = list(zip(*other.entries))
        out = []
        for row in self.entries:
            out_row = []
            for col in columns:
                acc = Scalar(0, self.char)
                for a, b in zip(row, col):
                    if a.is_zero or b.is_zero:
                        continue
                    acc = acc + a * b
                out_row.append(acc)
            out.append(tuple(out_row))
        return MatrixRep(tuple(out), self.char)

    def scale(self, c: Scalar) -> "MatrixRep":
        return MatrixRep(tuple(tuple(c * x for x in row) for row in self.entries), self.char)

    def flatten(self) -> CoordVector:
        return tuple(x for row in self.entries for x in row)

    @property
    def is_zero(self) -> bool:
        return is_zero_vector(self.flatten())

    def trace(self) -> Scalar:
        return sum((self.entries[i][i] for i in range(self.size)), Scalar(0, self.char))

    def to_json(self) -> List[List[Union[int, str]]]:
        return [[x.to_json() for x in row] for row in self.entries]


def bracket_matrices(x: MatrixRep, y: MatrixRep) -> MatrixRep:
    """[x, y] = xy - yx."""
    return x @ y - y @ x


# -----------------------------------------------------------------------------
# Elementos
# -----------------------------------------------------------------------------

@dataclass(frozen=True)
class AlgebraElement:
    """Vector de coordenadas respecto de la base fija del álgebra."""

    coords: CoordVector
    char: int

    @property
    def dimension(self) -> int:
        return len(self.coords)

    @property
    def is_zero(self) -> bool:
        return is_zero_vector(self.coords)

    def _check(self, other: "AlgebraElement") -> None:
        if other.dimension != self.dimension or other.char != self.char:
            raise ForeignElementError("Los elementos pertenecen a álgebras distintas")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        return AlgebraElement(tuple(a + b for a, b in zip(self.coords, other.coords)), self.char)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        return AlgebraElement(tuple(a - b for a, b in zip(self.coords, other.coords)), self.char)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(tuple(-a for a in self.coords), self.char)

    def scale(self, c: Union[Scalar, int]) -> "AlgebraElement":
        return AlgebraElement(tuple(a * c for a in self.coords), self.char)

    def to_json(self) -> List[Union[int, str]]:
        return [x.to_json() for x in self.coords]


# -----------------------------------------------------------------------------
# Constantes de estructura
# -----------------------------------------------------------------------------

StructureConstants = Tuple[Tuple[CoordVector, ...], ...]


def compute_structure_constants(basis: Sequence[MatrixRep], solver: SpanSolver) -> StructureConstants:
    """
    c[i][j] = coordenadas de [x_i, x_j]. Solo se calcula i < j; el resto sale
    por antisimetría. Lanza ClosureError con el primer par (base 1) que se sale.
    """
    n = len(basis)
    char = basis[0].char
    table: List[List[Optional[CoordVector]]] = [[None] * n for _ in range(n)]
    for i in range(n):
        table[i][i] = zero_vector(n, char)
        for j in range(i + 1, n):
            coords = solver.express(bracket_matrices(basis[i], basis[j]).flatten())
            if coords is None:
                raise ClosureError((i + 1, j + 1))
            table[i][j] = coords
            table[j][i] = tuple(-c for c in coords)
    return tuple(tuple(row) for row in table)  # type: ignore[arg-type]


# -----------------------------------------------------------------------------
# Álgebra de Lie
# -----------------------------------------------------------------------------

class LieAlgebra:
    """
    Álgebra de Lie de dimensión finita con base fija.
    Inmutable tras la construcción; los corchetes posteriores trabajan solo
    con coordenadas.
    """

    def __init__(self, name: str, basis: Sequence[MatrixRep], char: Characteristic):
        if not basis:
            raise InvalidAlgebraError("La base no puede estar vacía")
        size = basis[0].size
        for idx, m in enumerate(basis):
            if m.size != size:
                raise InvalidAlgebraError(f"x{idx + 1} tiene tamaño {m.size}; se esperaba {size}")
            if m.char != char.value:
                raise CharacteristicMismatchError(
                    f"x{idx + 1} está en característica {m.char}, no en {char.value}"
                )

        flat = IncrementalBasis(size * size)
        for idx, m in enumerate(basis):
            if not flat.add(m.flatten()):
                raise IndependenceError(idx + 1)

        self.name = name
        self.characteristic = char
        self.basis: Optional[Tuple[MatrixRep, ...]] = tuple(basis)
        self.matrix_size: Optional[int] = size
        self._solver: Optional[SpanSolver] = SpanSolver([m.flatten() for m in basis], char.value)
        self.structure_constants = compute_structure_constants(self.basis, self._solver)
        self._index_constants()
        logger.info(f"Álgebra '{name}' construida: dimensión {self.dimension}, char {char}")

    @classmethod
    def from_structure_constants(
        cls,
        name: str,
        constants: Sequence[Sequence[Sequence[RawValue]]],
        char: Characteristic,
    ) -> "LieAlgebra":
        """Álgebra abstracta dada por c_ij^k; se valida antisimetría y Jacobi."""
        n = len(constants)
        if n == 0:
            raise InvalidAlgebraError("La dimensión debe ser positiva")
        for i, row in enumerate(constants):
            if len(row) != n or any(len(v) != n for v in row):
                raise StructureConstantsError(f"Las constantes deben formar un arreglo {n}x{n}x{n} (fila {i + 1})")

        algebra = cls.__new__(cls)
        algebra.name = name
        algebra.characteristic = char
        algebra.basis = None
        algebra.matrix_size = None
        algebra._solver = None
        algebra.structure_constants = tuple(
            tuple(tuple(char.scalar(x) for x in v) for v in row) for row in constants
        )
        algebra._index_constants()
        algebra.check_antisymmetry()
        algebra.check_jacobi()
        logger.info(f"Álgebra abstracta '{name}' construida: dimensión {n}, char {char}")
        return algebra

    def _index_constants(self) -> None:
        # forma dispersa para el corchete: (i, j) -> [(k, c_ij^k)]
        self._sparse = [
            [[(k, c) for k, c in enumerate(v) if not c.is_zero] for v in row]
            for row in self.structure_constants
        ]

    # -------------------------------------------------------------------------
    # Propiedades
    # -------------------------------------------------------------------------

    @property
    def dimension(self) -> int:
        return len(self.structure_constants)

    @property
    def char(self) -> int:
        return self.characteristic.value

    @property
    def has_matrices(self) -> bool:
        return self.basis is not None

    @property
    def is_abelian(self) -> bool:
        return all(not entry for row in self._sparse for entry in row)

    def __repr__(self) -> str:
        return f"LieAlgebra(name={self.name!r}, dimension={self.dimension}, char={self.char})"

    # -------------------------------------------------------------------------
    # Elementos
    # -------------------------------------------------------------------------

    def element(self, coords: Sequence[Union[RawValue, str, Scalar]]) -> AlgebraElement:
        if len(coords) != self.dimension:
            raise ForeignElementError(
                f"Se esperaban {self.dimension} coordenadas, se recibieron {len(coords)}"
            )
        return AlgebraElement(tuple(self.characteristic.scalar(x) for x in coords), self.char)

    def basis_element(self, index: int) -> AlgebraElement:
        """e_i con índice base 0."""
        return AlgebraElement(unit_vector(self.dimension, index, self.char), self.char)

    def basis_elements(self) -> List[AlgebraElement]:
        return [self.basis_element(i) for i in range(self.dimension)]

    def zero(self) -> AlgebraElement:
        return AlgebraElement(zero_vector(self.dimension, self.char), self.char)

    def check_member(self, e: AlgebraElement) -> None:
        if e.dimension != self.dimension:
            raise ForeignElementError(
                f"Elemento de dimensión {e.dimension} en álgebra de dimensión {self.dimension}"
            )
        if e.char != self.char:
            raise ForeignElementError(
                f"Elemento de característica {e.char} en álgebra de característica {self.char}"
            )

    # -------------------------------------------------------------------------
    # Coordenadas <-> matrices
    # -------------------------------------------------------------------------

    def _require_matrices(self) -> None:
        if self.basis is None:
            raise InvalidAlgebraError(f"El álgebra '{self.name}' no tiene representación matricial")

    def recognize(self, m: MatrixRep) -> AlgebraElement:
        """Coordenadas λ con Σ λ_i x_i = m; error si m no está en el span."""
        self._require_matrices()
        if m.size != self.matrix_size:
            raise DimensionMismatchError(f"Matriz {m.size}x{m.size}; se esperaba {self.matrix_size}")
        if m.char != self.char:
            raise CharacteristicMismatchError(
                f"Matriz de característica {m.char} en álgebra de característica {self.char}"
            )
        coords = self._solver.express(m.flatten())  # type: ignore[union-attr]
        if coords is None:
            raise NotInSpanError(f"La matriz no pertenece al álgebra '{self.name}'")
        return AlgebraElement(coords, self.char)

    def realize(self, e: AlgebraElement) -> MatrixRep:
        """Σ coords_i · x_i como matriz."""
        self._require_matrices()
        self.check_member(e)
        acc = MatrixRep.zero(self.matrix_size, self.char)  # type: ignore[arg-type]
        for c, m in zip(e.coords, self.basis):  # type: ignore[arg-type]
            if not c.is_zero:
                acc = acc + m.scale(c)
        return acc

    # -------------------------------------------------------------------------
    # Corchete
    # -------------------------------------------------------------------------

    def bracket(self, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
        """result_k = Σ_{i,j} a_i b_j c_ij^k."""
        self.check_member(a)
        self.check_member(b)
        result = list(zero_vector(self.dimension, self.char))
        for i, ai in enumerate(a.coords):
            if ai.is_zero:
                continue
            row = self._sparse[i]
            for j, bj in enumerate(b.coords):
                if bj.is_zero:
                    continue
                coef = ai * bj
                for k, c in row[j]:
                    result[k] = result[k] + coef * c
        return AlgebraElement(tuple(result), self.char)

    def multiplication_table(self) -> List[List[AlgebraElement]]:
        return [
            [AlgebraElement(self.structure_constants[i][j], self.char) for j in range(self.dimension)]
            for i in range(self.dimension)
        ]

    def adjoint(self, e: AlgebraElement) -> List[CoordVector]:
        """Fila i = coordenadas de [e, x_i]."""
        return [self.bracket(e, x).coords for x in self.basis_elements()]

    # -------------------------------------------------------------------------
    # Validaciones
    # -------------------------------------------------------------------------

    def check_antisymmetry(self) -> None:
        c = self.structure_constants
        for i in range(self.dimension):
            if not is_zero_vector(c[i][i]):
                raise StructureConstantsError(f"[x{i + 1}, x{i + 1}] no es cero")
            for j in range(i + 1, self.dimension):
                if any(not (a + b).is_zero for a, b in zip(c[i][j], c[j][i])):
                    raise StructureConstantsError(f"No hay antisimetría en el par ({i + 1}, {j + 1})")

    def check_jacobi(self) -> None:
        """Con antisimetría basta revisar ternas i < j < k."""
        basis = self.basis_elements()
        for i, j, k in itertools.combinations(range(self.dimension), 3):
            x, y, z = basis[i], basis[j], basis[k]
            total = (
                self.bracket(x, self.bracket(y, z))
                + self.bracket(y, self.bracket(z, x))
                + self.bracket(z, self.bracket(x, y))
            )
            if not total.is_zero:
                raise StructureConstantsError(
                    f"Falla la identidad de Jacobi en la terna ({i + 1}, {j + 1}, {k + 1})"
                )
