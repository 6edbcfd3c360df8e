"""Constantes compartidas por el motor de Kempe.

Los formatos de texto de grafos y coloraciones usan ``#`` para comentarios y dos encabezados
opcionales: ``vertices N`` (vértices aislados al final) y ``paleta K`` (tamaño de paleta).
"""

from __future__ import annotations

CARACTER_COMENTARIO: str = "#"
ENCABEZADO_VERTICES: str = "vertices"
ENCABEZADO_PALETA: str = "paleta"

# Corpus de escritorio: grafos conexos del atlas de networkx.
MAX_VERTICES_CORPUS: int = 6
MAX_ARISTAS_CORPUS: int = 8
MAX_ARISTAS_CORPUS_REGULAR: int = 10

__all__ = [
    "CARACTER_COMENTARIO",
    "ENCABEZADO_VERTICES",
    "ENCABEZADO_PALETA",
    "MAX_VERTICES_CORPUS",
    "MAX_ARISTAS_CORPUS",
    "MAX_ARISTAS_CORPUS_REGULAR",
]
