"""Abanicos de Vizing alrededor de un vértice y sus predicados.

Sólo están definidos cuando cada vértice tiene exactamente un color faltante m(v), que es el
caso de una (χ'+1)-coloración de un grafo χ'-regular. Desde la arista vu el arco del digrafo
D_v lleva a la arista en v de color m(u); el abanico es la secuencia maximal que sigue esos arcos
y termina como camino, ciclo o cometa.

Los índices son 0-based: ``secuencia[i]`` es la arista v v_i.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum

from .errores import ErrorFormato, ErrorRegimen
from .kempe import componente
from .nucleo import Arista, Coloracion, normalizar_arista, otro_extremo

LOG = logging.getLogger(__name__)


class FormaAbanico(str, Enum):
    """Las tres terminaciones posibles de un abanico."""

    CAMINO = "camino"
    CICLO = "ciclo"
    COMETA = "cometa"


@dataclass(frozen=True)
class Abanico:
    """Abanico construido bajo una coloración fija.

    Guarda una foto de los colores (m(v), β(v v_i) y m(v_i)) para que la forma y M(X, c) se
    puedan consultar sin la coloración. `indice_retorno` sólo existe en los cometas.
    """

    centro: int
    secuencia: tuple[Arista, ...]
    forma: FormaAbanico
    indice_retorno: int | None
    faltante_centro: int
    colores_aristas: tuple[int, ...]
    faltantes: tuple[int, ...]

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(otro_extremo(arista, self.centro) for arista in self.secuencia)

    @property
    def ultimo(self) -> int:
        return otro_extremo(self.secuencia[-1], self.centro)

    def __len__(self) -> int:
        return len(self.secuencia)


def verificar_regimen(coloracion: Coloracion) -> None:
    """Eleva ErrorRegimen si algún vértice no tiene exactamente un color faltante."""
    if coloracion.un_solo_faltante:
        return
    fuera = [v for v in range(coloracion.grafo.num_vertices) if len(coloracion.faltantes(v)) != 1]
    raise ErrorRegimen(
        f"Los vértices {fuera[:10]} no tienen exactamente un color faltante con paleta {coloracion.paleta}"
    )


def sucesor(coloracion: Coloracion, v: int, arista: tuple[int, int]) -> Arista | None:
    """Arco de D_v desde la arista vu: la arista en v de color m(u), o None si m(u) = m(v)."""
    verificar_regimen(coloracion)
    clave = _arista_incidente(coloracion, v, arista)
    faltante_u = coloracion.faltante(otro_extremo(clave, v))
    if faltante_u == coloracion.faltante(v):
        return None
    return coloracion.arista_de_color(v, faltante_u)


def construir_abanico(coloracion: Coloracion, v: int, inicio: tuple[int, int]) -> Abanico:
    """Sigue los arcos de D_v desde `inicio` hasta un callejón sin salida o una arista ya vista.

    Raises:
        ErrorRegimen: Si algún vértice no tiene exactamente un color faltante.
        ErrorFormato: Si `inicio` no es incidente a `v`.
    """
    verificar_regimen(coloracion)
    secuencia = [_arista_incidente(coloracion, v, inicio)]
    posiciones = {secuencia[0]: 0}
    forma = FormaAbanico.CAMINO
    indice_retorno: int | None = None
    while True:
        siguiente = sucesor(coloracion, v, secuencia[-1])
        if siguiente is None:
            break
        if siguiente in posiciones:
            indice_retorno = posiciones[siguiente]
            forma = FormaAbanico.CICLO if indice_retorno == 0 else FormaAbanico.COMETA
            break
        posiciones[siguiente] = len(secuencia)
        secuencia.append(siguiente)

    return Abanico(
        centro=v,
        secuencia=tuple(secuencia),
        forma=forma,
        indice_retorno=indice_retorno if forma is FormaAbanico.COMETA else None,
        faltante_centro=coloracion.faltante(v),
        colores_aristas=tuple(coloracion.color(arista) for arista in secuencia),
        faltantes=tuple(coloracion.faltante(otro_extremo(arista, v)) for arista in secuencia),
    )


def forma_abanico(abanico: Abanico) -> FormaAbanico:
    """Recalcula la forma a partir del color faltante del último vértice."""
    ultimo = abanico.faltantes[-1]
    if ultimo == abanico.faltante_centro:
        return FormaAbanico.CAMINO
    if ultimo == abanico.colores_aristas[0]:
        return FormaAbanico.CICLO
    if ultimo in abanico.colores_aristas[1:]:
        return FormaAbanico.COMETA
    raise ErrorRegimen(f"El abanico centrado en {abanico.centro} no es maximal")


def vertice_faltante(abanico: Abanico, color: int) -> int | None:
    """M(X, c): primer vértice del abanico (sin contar el centro) al que le falta `color`."""
    for vertice, faltante in zip(abanico.vertices, abanico.faltantes):
        if faltante == color:
            return vertice
    return None


def colores_abanico(abanico: Abanico) -> frozenset[int]:
    """β(X): colores de las aristas del abanico."""
    return frozenset(abanico.colores_aristas)


def esta_saturado(coloracion: Coloracion, abanico: Abanico) -> bool:
    """Un ciclo está saturado si cada v_i está en K_v(m(v), m(v_i))."""
    _exigir_ciclo(abanico, "esta_saturado")
    verificar_regimen(coloracion)
    centro = abanico.centro
    faltante_centro = coloracion.faltante(centro)
    for vertice in abanico.vertices:
        cadena = componente(coloracion, centro, faltante_centro, coloracion.faltante(vertice))
        if not cadena.contiene(vertice):
            return False
    return True


def es_ajustado(coloracion: Coloracion, abanico: Abanico) -> bool:
    """Un ciclo es ajustado si cada v_i está en K_{v_{i-1}}(m(v_i), m(v_{i-1})), con índices cíclicos."""
    _exigir_ciclo(abanico, "es_ajustado")
    verificar_regimen(coloracion)
    vertices = abanico.vertices
    for indice, vertice in enumerate(vertices):
        previo = vertices[indice - 1]
        cadena = componente(coloracion, previo, coloracion.faltante(vertice), coloracion.faltante(previo))
        if not cadena.contiene(vertice):
            return False
    return True


def entrelazados(primero: Abanico, segundo: Abanico) -> bool:
    """Dos abanicos están entrelazados si coinciden en M(·, c) para cada color común de sus aristas."""
    for color in colores_abanico(primero) & colores_abanico(segundo):
        if vertice_faltante(primero, color) != vertice_faltante(segundo, color):
            return False
    return True


def abanico_por_color(coloracion: Coloracion, v: int, color: int) -> Abanico:
    """X_v(c): el abanico que empieza en la arista de `v` con color `color`."""
    arista = coloracion.arista_de_color(v, color)
    if arista is None:
        raise ErrorFormato(f"El vértice {v} no tiene arista de color {color}", codigo="SIN_ARISTA_DE_COLOR")
    return construir_abanico(coloracion, v, arista)


def abanicos_de(coloracion: Coloracion, v: int) -> tuple[Abanico, ...]:
    """Un abanico por cada arista incidente a `v`, en el orden de sus vecinos."""
    return tuple(construir_abanico(coloracion, v, arista) for arista in coloracion.grafo.incidentes(v))


def _exigir_ciclo(abanico: Abanico, operacion: str) -> None:
    if abanico.forma is not FormaAbanico.CICLO:
        raise ErrorRegimen(f"{operacion} sólo aplica a ciclos; el abanico es {abanico.forma.value}")


def _arista_incidente(coloracion: Coloracion, v: int, arista: tuple[int, int]) -> Arista:
    clave = normalizar_arista(*arista)
    if v not in clave or clave not in coloracion.grafo.aristas:
        raise ErrorFormato(f"La arista {clave} no es incidente a {v} en el grafo", codigo="ARISTA_NO_INCIDENTE")
    return clave


__all__ = [
    "FormaAbanico",
    "Abanico",
    "verificar_regimen",
    "sucesor",
    "construir_abanico",
    "forma_abanico",
    "vertice_faltante",
    "colores_abanico",
    "esta_saturado",
    "es_ajustado",
    "entrelazados",
    "abanico_por_color",
    "abanicos_de",
]
