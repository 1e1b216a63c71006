"""
Formato de texto: combinaciones lineales "x1 + 2 x4", conjuntos "{x1 + x4, x2}",
trazas "Depth = d -> {...}" y la tabla de multiplicar.
"""
from typing import List, Sequence

from app.services.ideal_engine import IdealResult
from app.services.lie_core import AlgebraElement, LieAlgebra
from app.services.scalar_field import Scalar


def _term(coef: Scalar, index: int) -> str:
    magnitude = -coef.value if coef.is_negative() else coef.value
    if magnitude == 1:
        return f"x{index}"
    return f"{magnitude} x{index}"


def format_element(e: AlgebraElement) -> str:
    """
    Términos en orden de índice. En característica 0, si el primer coeficiente
    es negativo y hay alguno positivo, los positivos van delante ("x4 - x1").
    En característica p los coeficientes son residuos 0..p-1.
    """
    terms = [(c, i + 1) for i, c in enumerate(e.coords) if not c.is_zero]
    if not terms:
        return "0"
    if terms[0][0].is_negative() and any(not c.is_negative() for c, _ in terms):
        terms = [t for t in terms if not t[0].is_negative()] + [t for t in terms if t[0].is_negative()]

    first_coef, first_index = terms[0]
    text = ("-" if first_coef.is_negative() else "") + _term(first_coef, first_index)
    for coef, index in terms[1:]:
        text += (" - " if coef.is_negative() else " + ") + _term(coef, index)
    return text


def format_set(elements: Sequence[AlgebraElement]) -> str:
    return "{" + ", ".join(format_element(e) for e in elements) + "}"


def format_trace(result: IdealResult, generator_texts: Sequence[str], char: int) -> List[str]:
    """Una línea por entrada de la traza y la línea final con el ideal."""
    lines = [f"Depth = {entry.depth} -> {format_set(entry.spanning_set)}" for entry in result.trace]
    gens = "{" + ", ".join(generator_texts) + "}"
    lines.append(
        f"Ideal <{gens}> = {format_set(result.basis)} "
        f"with dimension = {result.dimension} and char(K)={char}"
    )
    return lines


def format_table(L: LieAlgebra) -> List[str]:
    cells = [[format_element(e) for e in row] for row in L.multiplication_table()]
    width = max(len(c) for row in cells for c in row)
    return ["  ".join(c.rjust(width) for c in row).rstrip() for row in cells]


def normalize_whitespace(text: str) -> str:
    return " ".join(text.split())
