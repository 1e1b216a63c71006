"""
Dependencias compartidas de FastAPI para inyección en los routers.
Centraliza la resolución del álgebra y la traducción de errores del dominio.
"""
from typing import NoReturn

from fastapi import HTTPException, Path, Query, status

from app.exceptions import (
    ForeignElementError,
    GeneratorParseError,
    LieIdealError,
    NotInSpanError,
)
from app.services.algebra_catalog import algebra_catalog
from app.services.lie_core import LieAlgebra


def raise_http(error: LieIdealError) -> NoReturn:
    """Traduce un error del dominio a HTTPException."""
    if isinstance(error, GeneratorParseError):
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(error))
    if isinstance(error, (ForeignElementError, NotInSpanError)):
        raise HTTPException(status_code=status.HTTP_422_UNPROCESSABLE_ENTITY, detail=str(error))
    raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(error))


def resolve_algebra(selection: str, char: int) -> LieAlgebra:
    """Los archivos locales no se exponen por HTTP."""
    try:
        return algebra_catalog.resolve(selection, char, allow_files=False)
    except LieIdealError as e:
        raise_http(e)


async def get_algebra(
    algebra: str = Path(..., description="gl2, slN, utN, sutN o diagN"),
    char: int = Query(..., ge=0, description="0 o un primo p"),
) -> LieAlgebra:
    """Dependency: álgebra resuelta a partir de la ruta y la característica."""
    return resolve_algebra(algebra, char)
