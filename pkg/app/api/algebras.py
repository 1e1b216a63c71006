from fastapi import APIRouter, Depends

from app.models.algebra import AlgebraSummary, Envelope
from app.services.lie_core import LieAlgebra
from app.services.reports import report_service

from app.api.deps import get_algebra

router = APIRouter(tags=["algebras"])


@router.get("/algebras/{algebra}", response_model=AlgebraSummary)
async def get_algebra_summary(L: LieAlgebra = Depends(get_algebra)):
    return AlgebraSummary(
        name=L.name,
        char=L.char,
        dimension=L.dimension,
        matrix_size=L.matrix_size,
        abelian=L.is_abelian,
    )


@router.get("/algebras/{algebra}/table", response_model=Envelope)
async def get_table(L: LieAlgebra = Depends(get_algebra)):
    """Tabla de multiplicar: constantes de estructura y texto de cada entrada."""
    return report_service.table_report(L).envelope()


@router.get("/algebras/{algebra}/center", response_model=Envelope)
async def get_center(L: LieAlgebra = Depends(get_algebra)):
    return report_service.center_report(L).envelope()


@router.get("/algebras/{algebra}/derived", response_model=Envelope)
async def get_derived(L: LieAlgebra = Depends(get_algebra)):
    return report_service.derived_report(L).envelope()


@router.get("/algebras/{algebra}/series", response_model=Envelope)
async def get_series(L: LieAlgebra = Depends(get_algebra)):
    """Series derivada y central descendente; resoluble / nilpotente."""
    return report_service.series_report(L).envelope()
