"""
Constructores de álgebras de Lie matriciales estándar y carga de álgebras
personalizadas desde archivos JSON.
"""
import logging
import re
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, List, Union

from pydantic import ValidationError

from app.config import settings
from app.exceptions import AlgebraFileError, InvalidAlgebraError
from app.models.algebra import AlgebraDefinition
from app.services.lie_core import LieAlgebra, MatrixRep
from app.services.scalar_field import Characteristic

logger = logging.getLogger(__name__)

_BUILTIN = re.compile(r"^(gl|sl|ut|sut|diag)\s*(\d+)$")


def _elementary(m: int, i: int, j: int, char: Characteristic) -> MatrixRep:
    return MatrixRep.elementary(m, i, j, char.value)


class AlgebraCatalog:

    def _check_size(self, m: int, minimum: int = 1) -> None:
        if m < minimum:
            raise InvalidAlgebraError(f"El tamaño de matriz debe ser al menos {minimum}, se recibió {m}")
        if m > settings.MAX_MATRIX_SIZE:
            raise InvalidAlgebraError(
                f"Tamaño de matriz {m} por encima del máximo configurado ({settings.MAX_MATRIX_SIZE})"
            )

    # -------------------------------------------------------------------------
    # CONSTRUCTORES ESTÁNDAR
    # -------------------------------------------------------------------------

    def gl(self, m: int, char: Characteristic) -> LieAlgebra:
        """Todas las E_ij en orden por filas: x1 = E11, x2 = E12, ..."""
        self._check_size(m)
        basis = [_elementary(m, i, j, char) for i in range(m) for j in range(m)]
        return LieAlgebra(f"gl{m}", basis, char)

    def sl(self, m: int, char: Characteristic) -> LieAlgebra:
        """
        E_ij (i != j) en orden por filas, seguidas de E_ii - E_(i+1)(i+1).
        Son las matrices de traza cero también cuando p divide a m.
        """
        self._check_size(m, minimum=2)
        basis = [_elementary(m, i, j, char) for i in range(m) for j in range(m) if i != j]
        basis += [
            _elementary(m, i, i, char) - _elementary(m, i + 1, i + 1, char)
            for i in range(m - 1)
        ]
        return LieAlgebra(f"sl{m}", basis, char)

    def upper_triangular(self, m: int, char: Characteristic) -> LieAlgebra:
        self._check_size(m)
        basis = [_elementary(m, i, j, char) for i in range(m) for j in range(m) if i <= j]
        return LieAlgebra(f"ut{m}", basis, char)

    def strictly_upper_triangular(self, m: int, char: Characteristic) -> LieAlgebra:
        # con m = 1 la base sería vacía
        self._check_size(m, minimum=2)
        basis = [_elementary(m, i, j, char) for i in range(m) for j in range(m) if i < j]
        return LieAlgebra(f"sut{m}", basis, char)

    def diagonal(self, m: int, char: Characteristic) -> LieAlgebra:
        self._check_size(m)
        basis = [_elementary(m, i, i, char) for i in range(m)]
        return LieAlgebra(f"diag{m}", basis, char)

    # -------------------------------------------------------------------------
    # ÁLGEBRAS PERSONALIZADAS
    # -------------------------------------------------------------------------

    def parse_definition(self, source: Union[str, Path, Dict[str, Any]]) -> AlgebraDefinition:
        try:
            if isinstance(source, dict):
                return AlgebraDefinition.model_validate(source)
            text = Path(source).read_text(encoding="utf-8")
            return AlgebraDefinition.model_validate_json(text)
        except OSError as e:
            raise AlgebraFileError(f"No se pudo leer el archivo de álgebra: {e}")
        except ValidationError as e:
            raise AlgebraFileError(f"Archivo de álgebra inválido: {e.errors()[0]['msg']}")

    def load_custom(self, source: Union[str, Path, Dict[str, Any]], char: Characteristic) -> LieAlgebra:
        """Los enteros del archivo se reducen a la característica al cargar."""
        definition = self.parse_definition(source)
        basis = [MatrixRep.from_integers(matrix, char) for matrix in definition.basis]
        try:
            algebra = LieAlgebra(definition.name, basis, char)
        except InvalidAlgebraError as e:
            logger.error(f"Álgebra '{definition.name}' rechazada: {e}")
            raise
        return algebra

    def to_definition(self, L: LieAlgebra) -> Dict[str, Any]:
        """Inverso de load_custom para álgebras de característica 0 con entradas enteras."""
        if not L.has_matrices:
            raise InvalidAlgebraError(f"El álgebra '{L.name}' no tiene representación matricial")
        basis: List[List[List[int]]] = []
        for m in L.basis:  # type: ignore[union-attr]
            basis.append([[int(x.value) for x in row] for row in m.entries])
        return AlgebraDefinition(name=L.name, matrix_size=L.matrix_size, basis=basis).model_dump(
            exclude_none=True
        )

    # -------------------------------------------------------------------------
    # RESOLUCIÓN DE NOMBRES
    # -------------------------------------------------------------------------

    def resolve(self, selection: str, char: Union[int, Characteristic], allow_files: bool = True) -> LieAlgebra:
        """'gl2', 'sl3', 'ut 3', 'sut3', 'diag2' o 'file:RUTA'."""
        if not isinstance(char, Characteristic):
            char = Characteristic(char)
        selection = selection.strip()
        if selection.startswith("file:"):
            if not allow_files:
                raise InvalidAlgebraError("Las álgebras desde archivo no están permitidas aquí")
            return self.load_custom(selection[len("file:"):], char)
        return _resolve_builtin(self, selection, char)


@lru_cache(maxsize=64)
def _resolve_builtin(catalog: AlgebraCatalog, selection: str, char: Characteristic) -> LieAlgebra:
    match = _BUILTIN.match(selection)
    if not match:
        raise InvalidAlgebraError(f"Álgebra desconocida: '{selection}'")
    family, size = match.group(1), int(match.group(2))
    constructor = {
        "gl": catalog.gl,
        "sl": catalog.sl,
        "ut": catalog.upper_triangular,
        "sut": catalog.strictly_upper_triangular,
        "diag": catalog.diagonal,
    }[family]
    return constructor(size, char)


algebra_catalog = AlgebraCatalog()
