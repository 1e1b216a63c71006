# Cargar variables de entorno ANTES de cualquier importación
from dotenv import load_dotenv
load_dotenv()

import logging

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from app.api import algebras, ideals
from app.config import settings

logging.basicConfig(level=getattr(logging, settings.LOG_LEVEL.upper(), logging.WARNING))

app = FastAPI(
    title="lie-ideal: ideales en álgebras de Lie de matrices",
    description="Ideal generado, tabla de multiplicar, centro, series y simplicidad en característica 0 o p",
    version="1.0.0",
)

# Orígenes leídos desde CORS_ORIGINS (puede ser CSV para múltiples)
_cors_origins = [o.strip().rstrip("/") for o in settings.CORS_ORIGINS.split(",") if o.strip()]
app.add_middleware(
    CORSMiddleware,
    allow_origins=_cors_origins,
    allow_methods=["GET", "POST"],
    allow_headers=["*"],
)

# Incluir routers
app.include_router(algebras.router, prefix="/api", tags=["algebras"])
app.include_router(ideals.router, prefix="/api", tags=["ideals"])


@app.get("/")
async def root():
    return {
        "message": "lie-ideal API funcionando correctamente",
        "version": "1.0.0",
        "docs": "/docs",
    }
