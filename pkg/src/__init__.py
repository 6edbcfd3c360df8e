"""Motor de reconfiguración de Kempe para coloraciones de aristas.

Un intercambio de Kempe (cambio de los dos colores de una cadena bicromática maximal) transforma
una coloración propia en otra. El paquete construye cadenas, abanicos de Vizing, su inversión,
la reducción a grafos regulares y el conductor que lleva cualquier (χ'+1)-coloración a una
χ'-coloración dada, todo verificado contra un oráculo exhaustivo en grafos pequeños.
"""

from .nucleo import Coloracion, Grafo, interpretar_coloracion, interpretar_grafo

__all__ = [
    "Grafo",
    "Coloracion",
    "interpretar_grafo",
    "interpretar_coloracion",
]
