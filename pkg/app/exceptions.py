"""
Jerarquía de errores del dominio.
Cada error conoce su código de salida para la CLI; la capa HTTP los traduce
a HTTPException en app/api/deps.py.
"""
from typing import Optional, Tuple


class LieIdealError(Exception):
    exit_code: int = 1


# ── Cuerpo base ──────────────────────────────────────────────────────────────

class InvalidCharacteristicError(LieIdealError):
    exit_code = 5


class ScalarError(LieIdealError):
    exit_code = 5


class CharacteristicMismatchError(ScalarError):
    pass


class ZeroDivisionFieldError(ScalarError):
    pass


# ── Álgebra lineal ───────────────────────────────────────────────────────────

class LinalgError(LieIdealError):
    exit_code = 5


class RaggedMatrixError(LinalgError):
    pass


class DimensionMismatchError(LinalgError):
    pass


# ── Álgebras de Lie ──────────────────────────────────────────────────────────

class InvalidAlgebraError(LieIdealError):
    exit_code = 5


class AlgebraFileError(InvalidAlgebraError):
    pass


class IndependenceError(InvalidAlgebraError):
    def __init__(self, index: int, message: Optional[str] = None):
        self.index = index
        super().__init__(message or f"La matriz x{index} es combinación lineal de las anteriores")


class ClosureError(InvalidAlgebraError):
    def __init__(self, pair: Tuple[int, int], message: Optional[str] = None):
        self.pair = pair
        i, j = pair
        super().__init__(message or f"El corchete [x{i}, x{j}] no pertenece al span de la base")


class StructureConstantsError(InvalidAlgebraError):
    pass


class NotInSpanError(LieIdealError):
    exit_code = 3


class ForeignElementError(LieIdealError):
    exit_code = 3


# ── Entrada de usuario ───────────────────────────────────────────────────────

class GeneratorParseError(LieIdealError):
    exit_code = 2
