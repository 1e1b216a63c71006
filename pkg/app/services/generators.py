"""
Gramática de generadores: términos `k*xi`, `k xi`, `xi`, `-xi` unidos por + / -,
generadores separados por comas. "0" es el elemento nulo. También se aceptan
vectores de coordenadas explícitos separados por ';'.
"""
import re
from dataclasses import dataclass
from typing import List

from app.exceptions import ForeignElementError, GeneratorParseError, LieIdealError
from app.services.lie_core import AlgebraElement, LieAlgebra
from app.services.rendering import format_element, normalize_whitespace

_TERM = r"(?:\d+\s*\*?\s*)?x\d+|\d+"
# Espacios solo alrededor de + / - y *, o entre coeficiente y variable.
_EXPRESSION = re.compile(rf"\s*[+-]?\s*(?:{_TERM})(?:\s*[+-]\s*(?:{_TERM}))*\s*")
_TOKEN = re.compile(r"([+-]?)\s*(?:(\d+)\s*\*?\s*)?x(\d+)|([+-]?)\s*(\d+)")


@dataclass(frozen=True)
class GeneratorSpec:
    text: str
    element: AlgebraElement


def parse_expression(L: LieAlgebra, expression: str) -> AlgebraElement:
    if not expression.strip() or not _EXPRESSION.fullmatch(expression):
        raise GeneratorParseError(f"Expresión de generador inválida: '{expression.strip()}'")

    coords = [0] * L.dimension
    for match in _TOKEN.finditer(expression):
        sign, coef, index, const_sign, constant = match.groups()
        if index is None:
            if int(constant) != 0:
                raise GeneratorParseError(
                    f"Constante {const_sign}{constant} sin variable en '{expression.strip()}'"
                )
            continue
        i = int(index)
        if not 1 <= i <= L.dimension:
            raise ForeignElementError(f"x{i} no existe en un álgebra de dimensión {L.dimension}")
        value = int(coef) if coef is not None else 1
        coords[i - 1] += -value if sign == "-" else value
    return L.element(coords)


def parse_generators(L: LieAlgebra, text: str) -> List[GeneratorSpec]:
    """'x3, x3 - x1' -> dos generadores; el texto se conserva normalizado."""
    if not text.strip():
        return []
    return [
        GeneratorSpec(text=normalize_whitespace(part), element=parse_expression(L, part))
        for part in text.split(",")
    ]


def parse_coordinate_generators(L: LieAlgebra, text: str) -> List[GeneratorSpec]:
    """'1,0,0,1; 0,1,0,0' -> dos generadores dados por coordenadas."""
    specs = []
    for part in text.split(";"):
        if not part.strip():
            continue
        entries = [x.strip() for x in part.split(",")]
        if any(not re.fullmatch(r"-?\d+(?:/\d+)?", x) for x in entries):
            raise GeneratorParseError(f"Coordenadas inválidas: '{part.strip()}'")
        try:
            element = L.element(entries)
        except ForeignElementError:
            raise
        except LieIdealError as e:
            raise GeneratorParseError(str(e))
        specs.append(GeneratorSpec(text=format_element(element), element=element))
    return specs
