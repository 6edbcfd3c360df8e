"""Modelos de intercambio validados con Pydantic (biblioteca que crea clases con validaciones automáticas).

Describen las líneas JSON de las trazas, el archivo auxiliar de la regularización y las filas
de resumen del subcomando ``explore``.
"""

from __future__ import annotations

from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt, PositiveInt, model_validator


class AnclaModelo(BaseModel):
    """Elemento que identifica una cadena: una arista o, para cadenas vacías, un vértice."""

    model_config = ConfigDict(populate_by_name=True, extra="forbid")

    arista: Optional[Tuple[NonNegativeInt, NonNegativeInt]] = Field(
        default=None,
        alias="edge",
        description="Arista [u, v] contenida en la cadena.",
    )
    vertice: Optional[NonNegativeInt] = Field(
        default=None,
        alias="vertex",
        description="Vértice ancla, usado sólo cuando la cadena no tiene aristas.",
    )

    @model_validator(mode="after")
    def _exactamente_una(self) -> "AnclaModelo":
        if (self.arista is None) == (self.vertice is None):
            raise ValueError("El ancla debe indicar exactamente una de 'edge' o 'vertex'")
        if self.arista is not None and self.arista[0] == self.arista[1]:
            raise ValueError(f"La arista ancla {list(self.arista)} es un lazo")
        return self


class RegistroTrazaModelo(BaseModel):
    """Una línea del archivo de traza: par de colores y ancla."""

    model_config = ConfigDict(populate_by_name=True, extra="forbid")

    a: PositiveInt = Field(..., description="Primer color del par intercambiado.")
    b: PositiveInt = Field(..., description="Segundo color del par intercambiado.")
    ancla: AnclaModelo = Field(..., alias="anchor", description="Elemento que ubica la cadena.")

    @model_validator(mode="after")
    def _colores_distintos(self) -> "RegistroTrazaModelo":
        if self.a == self.b:
            raise ValueError(f"El par de colores debe ser de colores distintos; llegó ({self.a}, {self.b})")
        return self


class NivelModelo(BaseModel):
    """Un paso de duplicación: vértices antes de duplicar y pares unidos por el emparejamiento."""

    model_config = ConfigDict(extra="forbid")

    num_vertices: NonNegativeInt = Field(..., description="Vértices del nivel antes de duplicarlo.")
    pares_emparejados: List[Tuple[NonNegativeInt, NonNegativeInt]] = Field(
        default_factory=list,
        description="Aristas del emparejamiento entre un vértice de grado mínimo y su copia.",
    )


class IncrustacionModelo(BaseModel):
    """Archivo auxiliar JSON que acompaña al supergrafo regular."""

    model_config = ConfigDict(extra="forbid")

    vertices_originales: NonNegativeInt = Field(..., description="Vértices del grafo original.")
    aristas_originales: List[Tuple[NonNegativeInt, NonNegativeInt]] = Field(
        default_factory=list,
        description="Aristas del grafo original en orden canónico.",
    )
    chi: NonNegativeInt = Field(..., description="Grado final del supergrafo (índice cromático).")
    niveles: List[NivelModelo] = Field(default_factory=list, description="Pasos de duplicación en orden.")
    vertices_supergrafo: NonNegativeInt = Field(..., description="Vértices del supergrafo final.")


class ResumenClaseModelo(BaseModel):
    """Fila del resumen de clases de reconfiguración."""

    model_config = ConfigDict(extra="forbid")

    clase: NonNegativeInt = Field(..., description="Índice de la clase en orden canónico.")
    tamano: PositiveInt = Field(..., description="Cantidad de coloraciones de la clase.")
    diametro: NonNegativeInt = Field(..., description="Diámetro del subgrafo de reconfiguración de la clase.")
    representante: str = Field(..., description="Vector de colores de la menor coloración de la clase.")


__all__ = [
    "AnclaModelo",
    "RegistroTrazaModelo",
    "NivelModelo",
    "IncrustacionModelo",
    "ResumenClaseModelo",
]
