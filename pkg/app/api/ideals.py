import logging

from fastapi import APIRouter, HTTPException, status

from app.exceptions import LieIdealError
from app.models.algebra import Envelope
from app.models.ideal import IdealRequest, SimplicityRequest
from app.services.generators import parse_coordinate_generators, parse_generators
from app.services.reports import report_service

from app.api.deps import raise_http, resolve_algebra

logger = logging.getLogger(__name__)

router = APIRouter(tags=["ideals"])


@router.post("/ideals", response_model=Envelope)
async def compute_ideal(payload: IdealRequest):
    """
    Ideal generado por `gens` (expresiones) o `coords` (vectores).
    La traza por profundidad va en el sobre.
    """
    if payload.gens is None and payload.coords is None:
        raise HTTPException(
            status_code=status.HTTP_400_BAD_REQUEST,
            detail="Se requiere gens o coords",
        )
    L = resolve_algebra(payload.algebra, payload.char)
    try:
        if payload.coords is not None:
            gens = parse_coordinate_generators(L, payload.coords)
        else:
            gens = parse_generators(L, payload.gens)
        return report_service.ideal_report(L, gens).envelope()
    except LieIdealError as e:
        logger.error(f"Error calculando ideal en {payload.algebra}: {e}")
        raise_http(e)


@router.post("/simplicity", response_model=Envelope)
async def check_simplicity(payload: SimplicityRequest):
    """Veredicto simple / not_simple / inconclusive con testigo si lo hay."""
    L = resolve_algebra(payload.algebra, payload.char)
    return report_service.simplicity_report(L, cap=payload.cap).envelope()
