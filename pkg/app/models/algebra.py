from pydantic import BaseModel, Field, field_validator, model_validator
from typing import Dict, List, Optional, Union

Coordinates = List[Union[int, str]]


# Formato de archivo de definición de álgebra (entrada)
class AlgebraDefinition(BaseModel):
    """La característica no se guarda en el archivo: se aplica al cargar."""
    name: str = Field(..., min_length=1, max_length=255)
    matrix_size: int = Field(..., ge=1)
    basis: List[List[List[int]]] = Field(..., min_length=1)
    dimension: Optional[int] = Field(None, ge=1)

    @field_validator('name')
    @classmethod
    def validate_name(cls, v):
        if not v.strip():
            raise ValueError('El nombre no puede estar vacío')
        return v.strip()

    @model_validator(mode='after')
    def validate_shapes(self):
        for idx, matrix in enumerate(self.basis, start=1):
            if len(matrix) != self.matrix_size or any(len(row) != self.matrix_size for row in matrix):
                raise ValueError(
                    f'La matriz x{idx} debe ser {self.matrix_size}x{self.matrix_size}'
                )
        if self.dimension is not None and self.dimension != len(self.basis):
            raise ValueError(
                f'Se declararon {self.dimension} elementos pero la base tiene {len(self.basis)}'
            )
        return self


# Modelos de Response (salida)
class AlgebraSummary(BaseModel):
    name: str
    char: int
    dimension: int
    matrix_size: Optional[int] = None
    abelian: bool


class TableResponse(BaseModel):
    dimension: int
    # structure_constants[i][j] = coordenadas de [x_i, x_j]
    structure_constants: List[List[Coordinates]]
    entries: List[List[str]]


class BasisResponse(BaseModel):
    basis: List[Coordinates]
    basis_text: List[str]
    dimension: int


class SeriesResponse(BaseModel):
    derived_dimensions: List[int]
    lower_central_dimensions: List[int]
    solvable: bool
    nilpotent: bool
    derived_terms: List[List[str]] = []
    lower_central_terms: List[List[str]] = []


class Envelope(BaseModel):
    """Sobre JSON común a todos los comandos."""
    command: str
    algebra: str
    char: int
    result: Dict
    trace: Optional[List[Dict]] = None
