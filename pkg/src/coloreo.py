"""Coloreo constructivo con a lo sumo Δ+1 colores (teorema de Vizing).

Cada arista sin color se colorea con un abanico alrededor de uno de sus extremos: se invierte el
camino bicromático (c, d) que sale del centro, se recorta el abanico hasta un vértice libre de d
y se rotan los colores del abanico antes de colorear la última arista con d.
"""

from __future__ import annotations

import logging

from .nucleo import Arista, Coloracion, Grafo, es_propia, normalizar_arista

LOG = logging.getLogger(__name__)


class _Parcial:
    """Coloración parcial con acceso por vértice y color."""

    def __init__(self, grafo: Grafo, paleta: int) -> None:
        self.grafo = grafo
        self.paleta = paleta
        self.colores: dict[Arista, int] = {}
        self.por_vertice: list[dict[int, int]] = [{} for _ in range(grafo.num_vertices)]

    def color(self, u: int, v: int) -> int | None:
        return self.colores.get(normalizar_arista(u, v))

    def libre(self, x: int, color: int) -> bool:
        return color not in self.por_vertice[x]

    def primer_libre(self, x: int) -> int:
        return next(color for color in range(1, self.paleta + 1) if self.libre(x, color))

    def asignar(self, u: int, v: int, color: int | None) -> None:
        arista = normalizar_arista(u, v)
        previo = self.colores.pop(arista, None)
        if previo is not None:
            del self.por_vertice[u][previo]
            del self.por_vertice[v][previo]
        if color is not None:
            self.colores[arista] = color
            self.por_vertice[u][color] = v
            self.por_vertice[v][color] = u


def colorear_vizing(grafo: Grafo, paleta: int | None = None) -> Coloracion:
    """Coloración propia con Δ+1 colores (o `paleta`, si es mayor).

    Raises:
        RuntimeError: Si el resultado no fuera propio; indica un error interno.
    """
    tope = grafo.grado_maximo + 1 if grafo.aristas else 0
    parcial = _Parcial(grafo, max(tope, paleta or 0))
    for u, v in grafo.aristas_ordenadas:
        _colorear_arista(parcial, u, v)

    coloracion = Coloracion.desde_mapa(grafo, parcial.paleta, parcial.colores)
    if not es_propia(grafo, coloracion):
        raise RuntimeError("El coloreo de Vizing produjo una coloración impropia")
    LOG.debug("Coloreo de Vizing con %s colores sobre %s aristas", parcial.paleta, len(grafo.aristas))
    return coloracion


def _colorear_arista(parcial: _Parcial, u: int, v: int) -> None:
    abanico = _abanico_maximal(parcial, u, v)
    c = parcial.primer_libre(u)
    d = parcial.primer_libre(abanico[-1])
    _invertir_camino(parcial, u, c, d)

    corte = next(
        indice
        for indice, w in enumerate(abanico)
        if parcial.libre(w, d) and _es_abanico(parcial, u, abanico[: indice + 1])
    )
    recortado = abanico[: corte + 1]
    nuevos = [parcial.color(u, siguiente) for siguiente in recortado[1:]] + [d]
    for w in recortado:
        parcial.asignar(u, w, None)
    for w, color in zip(recortado, nuevos):
        parcial.asignar(u, w, color)


def _abanico_maximal(parcial: _Parcial, u: int, v: int) -> list[int]:
    """Secuencia v = F[0], F[1], ...: la arista u F[i+1] tiene un color libre en F[i]."""
    abanico = [v]
    en_abanico = {v}
    while True:
        ultimo = abanico[-1]
        siguiente = next(
            (
                w
                for w in parcial.grafo.vecinos(u)
                if w not in en_abanico
                and parcial.color(u, w) is not None
                and parcial.libre(ultimo, parcial.color(u, w))
            ),
            None,
        )
        if siguiente is None:
            return abanico
        abanico.append(siguiente)
        en_abanico.add(siguiente)


def _es_abanico(parcial: _Parcial, u: int, vertices: list[int]) -> bool:
    for previo, siguiente in zip(vertices, vertices[1:]):
        color = parcial.color(u, siguiente)
        if color is None or not parcial.libre(previo, color):
            return False
    return True


def _invertir_camino(parcial: _Parcial, u: int, c: int, d: int) -> None:
    """Intercambia c y d en el camino que sale de u por su arista de color d (u tiene libre c)."""
    if c == d:
        return
    camino: list[tuple[int, int, int]] = []
    actual, buscado = u, d
    while buscado in parcial.por_vertice[actual]:
        siguiente = parcial.por_vertice[actual][buscado]
        camino.append((actual, siguiente, buscado))
        actual = siguiente
        buscado = c if buscado == d else d
    for x, y, _ in camino:
        parcial.asignar(x, y, None)
    for x, y, color in camino:
        parcial.asignar(x, y, c if color == d else d)


__all__ = ["colorear_vizing"]
