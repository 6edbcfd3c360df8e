"""Reducción a un supergrafo χ'-regular.

Cada paso toma dos copias del grafo actual y une con una arista cada vértice de grado mínimo con
su copia, lo que sube el grado mínimo en exactamente uno. La copia del lado ``s`` del vértice
``x`` en un nivel de ``n`` vértices recibe el identificador ``s·n + x``, así el grafo original
conserva sus identificadores dentro del supergrafo.

Las coloraciones se elevan copiándolas en ambos lados y las trazas del supergrafo se proyectan
de vuelta intercambiando, por cada cadena, sus trozos dentro del grafo original.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import networkx as nx

from .errores import ErrorCadenaObsoleta, ErrorFormato
from .kempe import RegistroIntercambio, Traza, componente, intercambiar_desde
from .modelos import IncrustacionModelo, NivelModelo
from .nucleo import Arista, Coloracion, Grafo

LOG = logging.getLogger(__name__)


@dataclass(frozen=True)
class Nivel:
    """Un paso de duplicación: vértices antes de duplicar, emparejamiento agregado y grafo resultante."""

    num_vertices: int
    pares: tuple[Arista, ...]
    grafo: Grafo

    def copia(self, lado: int, vertice: int) -> int:
        """Identificador en el grafo resultante de la copia `lado` (0 o 1) de `vertice`."""
        if lado not in (0, 1) or not 0 <= vertice < self.num_vertices:
            raise ValueError(f"Copia inválida: lado={lado}, vértice={vertice}")
        return lado * self.num_vertices + vertice


@dataclass(frozen=True)
class Incrustacion:
    """Relación entre el grafo original y su supergrafo regular."""

    original: Grafo
    chi: int
    niveles: tuple[Nivel, ...]

    @property
    def supergrafo(self) -> Grafo:
        return self.niveles[-1].grafo if self.niveles else self.original

    def vertice(self, nivel: int, lado: int, vertice: int) -> int:
        """Vértice del supergrafo final que representa la copia `lado` de `vertice` en el nivel dado."""
        return self.niveles[nivel].copia(lado, vertice)

    def a_modelo(self) -> IncrustacionModelo:
        return IncrustacionModelo(
            vertices_originales=self.original.num_vertices,
            aristas_originales=list(self.original.aristas_ordenadas),
            chi=self.chi,
            niveles=[NivelModelo(num_vertices=nivel.num_vertices, pares_emparejados=list(nivel.pares)) for nivel in self.niveles],
            vertices_supergrafo=self.supergrafo.num_vertices,
        )

    def a_json(self) -> str:
        return self.a_modelo().model_dump_json(indent=2) + "\n"


def regularizar(grafo: Grafo, chi: int) -> tuple[Grafo, Incrustacion]:
    """Duplica y empareja hasta que el grafo sea regular de grado `chi`.

    Parámetros
    ----------
    grafo : Grafo
        Grafo original.
    chi : int
        Grado objetivo; normalmente el índice cromático entregado por el oráculo.

    Retorna
    -------
    tuple[Grafo, Incrustacion]
        Supergrafo chi-regular (tras exactamente chi − δ pasos) y la incrustación.

    Raises
    ------
    ErrorFormato
        Si chi es menor que el grado máximo.
    """
    if chi < grafo.grado_maximo:
        raise ErrorFormato(
            f"chi={chi} es menor que el grado máximo {grafo.grado_maximo}", codigo="CHI_MENOR_QUE_DELTA"
        )
    niveles: list[Nivel] = []
    actual = grafo
    while actual.num_vertices > 0 and actual.grado_minimo < chi:
        actual = _duplicar(actual, niveles)
    LOG.info(
        "Regularización: %s vértices → %s vértices en %s pasos (chi=%s)",
        grafo.num_vertices,
        actual.num_vertices,
        len(niveles),
        chi,
    )
    return actual, Incrustacion(original=grafo, chi=chi, niveles=tuple(niveles))


def _duplicar(grafo: Grafo, niveles: list[Nivel]) -> Grafo:
    n = grafo.num_vertices
    minimo = grafo.grado_minimo
    pares = tuple((x, x + n) for x in range(n) if grafo.grado(x) == minimo)
    aristas = set(grafo.aristas)
    aristas.update((u + n, v + n) for u, v in grafo.aristas)
    aristas.update(pares)
    siguiente = Grafo(num_vertices=2 * n, aristas=frozenset(aristas))
    niveles.append(Nivel(num_vertices=n, pares=pares, grafo=siguiente))
    LOG.debug("Nivel %s: %s vértices de grado %s emparejados", len(niveles), len(pares), minimo)
    return siguiente


def elevar_coloracion(coloracion: Coloracion, incrustacion: Incrustacion) -> Coloracion:
    """Copia la coloración en ambos lados de cada nivel; cada arista del emparejamiento toma el menor color faltante común."""
    if coloracion.grafo != incrustacion.original:
        raise ErrorFormato("La coloración no corresponde al grafo original de la incrustación", codigo="GRAFO_DISTINTO")
    actual = coloracion
    for nivel in incrustacion.niveles:
        n = nivel.num_vertices
        asignacion: dict[Arista, int] = {}
        for (u, v), color in actual.asignacion.items():
            asignacion[(u, v)] = color
            asignacion[(u + n, v + n)] = color
        for x, copia in nivel.pares:
            disponibles = actual.faltantes(x)
            if not disponibles:
                raise ErrorFormato(
                    f"El vértice {x} no tiene colores faltantes para la arista del emparejamiento {(x, copia)}",
                    codigo="SIN_COLOR_DISPONIBLE",
                )
            asignacion[(x, copia)] = min(disponibles)
        actual = Coloracion.desde_mapa(nivel.grafo, coloracion.paleta, asignacion)
    return actual


def restringir_coloracion(coloracion_super: Coloracion, incrustacion: Incrustacion) -> Coloracion:
    """Restricción de una coloración del supergrafo a las aristas del grafo original."""
    original = incrustacion.original
    return Coloracion(
        grafo=original,
        paleta=coloracion_super.paleta,
        colores=tuple(coloracion_super.color(arista) for arista in original.aristas_ordenadas),
    )


def proyectar_traza(traza: Traza, incrustacion: Incrustacion, inicio: Coloracion) -> Traza:
    """Proyecta una traza del supergrafo sobre el grafo original.

    La traza debe reproducirse sobre ``elevar_coloracion(inicio, incrustacion)``. Cada cadena del
    supergrafo se corta con las aristas originales; cada trozo conexo es una cadena completa del
    grafo original y se intercambia por separado.

    Raises:
        ErrorCadenaObsoleta: Si algún registro no encaja con la coloración vigente.
    """
    arriba = elevar_coloracion(inicio, incrustacion)
    abajo = inicio
    originales = incrustacion.original.aristas
    proyectados: list[RegistroIntercambio] = []
    for registro in traza:
        a, b = registro.colores
        try:
            cadena = componente(arriba, registro.ancla, a, b)
        except ErrorFormato as error:
            raise ErrorCadenaObsoleta(f"Registro inaplicable en el supergrafo: {error.detalle}") from error
        if cadena.es_vacia:
            continue
        arriba = arriba.con_cambios({arista: b if arriba.color(arista) == a else a for arista in cadena.aristas})
        for trozo in _trozos(cadena.aristas & originales):
            esperado = componente(abajo, min(trozo), a, b)
            if esperado.aristas != trozo:
                raise ErrorCadenaObsoleta(f"El trozo anclado en {min(trozo)} no es una cadena del grafo original")
            abajo, proyectado = intercambiar_desde(abajo, min(trozo), a, b)
            proyectados.append(proyectado)
    return tuple(proyectados)


def _trozos(aristas: frozenset[Arista]) -> list[frozenset[Arista]]:
    """Parte un conjunto de aristas en componentes conexas, ordenadas por su arista mínima."""
    if not aristas:
        return []
    red = nx.Graph()
    red.add_edges_from(aristas)
    trozos = [frozenset(a for a in aristas if a[0] in vertices) for vertices in nx.connected_components(red)]
    return sorted(trozos, key=min)


__all__ = [
    "Nivel",
    "Incrustacion",
    "regularizar",
    "elevar_coloracion",
    "restringir_coloracion",
    "proyectar_traza",
]
