"""Oráculo exhaustivo para grafos pequeños.

Calcula el índice cromático por backtracking (búsqueda con retroceso), enumera todas las
coloraciones propias con k colores, arma el grafo de reconfiguración de Kempe y resuelve
búsquedas en anchura acotadas. Todo es determinista: las coloraciones se ordenan
lexicográficamente por sus vectores de colores sobre las aristas ordenadas.
"""

from __future__ import annotations

import logging
import random
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

import networkx as nx

from config.presupuestos import LimitesOraculo, PresupuestoBusqueda, limites_por_defecto, presupuesto_por_defecto

from .constantes import MAX_ARISTAS_CORPUS, MAX_ARISTAS_CORPUS_REGULAR, MAX_VERTICES_CORPUS
from .errores import ErrorFormato, ErrorLimiteOraculo, ErrorPresupuestoAgotado
from .kempe import RegistroIntercambio, Traza, componente, intercambiar, vecinos_kempe
from .nucleo import Coloracion, Grafo, es_propia

LOG = logging.getLogger(__name__)

Vector = tuple[int, ...]
Meta = Callable[[Coloracion], bool]


@dataclass(frozen=True)
class GrafoReconfiguracion:
    """Coloraciones propias con k colores y sus adyacencias por un intercambio de Kempe.

    Los nodos de `red` son índices en `coloraciones`.
    """

    grafo: Grafo
    paleta: int
    coloraciones: tuple[Coloracion, ...]
    red: nx.Graph = field(compare=False, repr=False)

    def clases(self) -> list[list[int]]:
        """Componentes conexas como listas ordenadas de índices, ordenadas por su menor elemento."""
        return sorted((sorted(clase) for clase in nx.connected_components(self.red)), key=lambda clase: clase[0])

    def diametro(self, clase: Iterable[int]) -> int:
        subgrafo = self.red.subgraph(clase)
        if subgrafo.number_of_nodes() <= 1:
            return 0
        return int(nx.diameter(subgrafo))


def _colorear(grafo: Grafo, paleta: int) -> Iterator[Vector]:
    """Genera las coloraciones propias en orden lexicográfico."""
    aristas = grafo.aristas_ordenadas
    usados: list[set[int]] = [set() for _ in range(grafo.num_vertices)]
    asignacion = [0] * len(aristas)

    def paso(indice: int) -> Iterator[Vector]:
        if indice == len(aristas):
            yield tuple(asignacion)
            return
        u, v = aristas[indice]
        for color in range(1, paleta + 1):
            if color in usados[u] or color in usados[v]:
                continue
            asignacion[indice] = color
            usados[u].add(color)
            usados[v].add(color)
            yield from paso(indice + 1)
            usados[u].discard(color)
            usados[v].discard(color)

    yield from paso(0)


def indice_cromatico(grafo: Grafo) -> int:
    """Menor k que admite una coloración propia; 0 para grafos sin aristas.

    Raises:
        RuntimeError: Si el resultado no es Δ ni Δ+1, lo que contradiría el teorema de Vizing.
    """
    if not grafo.aristas:
        return 0
    delta = grafo.grado_maximo
    for paleta in (delta, delta + 1):
        if next(_colorear(grafo, paleta), None) is not None:
            return paleta
    raise RuntimeError(f"El grafo no admite coloración con {delta + 1} colores, contradiciendo a Vizing")


def coloracion_optima(grafo: Grafo) -> Coloracion:
    """Primera coloración (en orden lexicográfico) con χ' colores."""
    paleta = indice_cromatico(grafo)
    vector = next(_colorear(grafo, paleta), ())
    return Coloracion(grafo=grafo, paleta=paleta, colores=vector)


def enumerar_coloraciones(grafo: Grafo, paleta: int, limites: LimitesOraculo | None = None) -> list[Coloracion]:
    """Todas las coloraciones propias con `paleta` colores, en orden canónico.

    Raises:
        ErrorLimiteOraculo: Si el grafo supera la guarda de aristas.
    """
    _verificar_guarda(grafo, limites)
    return [Coloracion(grafo=grafo, paleta=paleta, colores=vector) for vector in _colorear(grafo, paleta)]


def grafo_reconfiguracion(grafo: Grafo, paleta: int, limites: LimitesOraculo | None = None) -> GrafoReconfiguracion:
    """Arma el grafo de reconfiguración completo para `paleta` colores."""
    coloraciones = enumerar_coloraciones(grafo, paleta, limites)
    indice = {coloracion.colores: posicion for posicion, coloracion in enumerate(coloraciones)}
    red = nx.Graph()
    red.add_nodes_from(range(len(coloraciones)))
    for posicion, coloracion in enumerate(coloraciones):
        for _, vecino in vecinos_kempe(coloracion):
            red.add_edge(posicion, indice[vecino.colores])
    LOG.debug(
        "Grafo de reconfiguración con %s coloraciones y %s adyacencias (paleta %s)",
        red.number_of_nodes(),
        red.number_of_edges(),
        paleta,
    )
    return GrafoReconfiguracion(grafo=grafo, paleta=paleta, coloraciones=tuple(coloraciones), red=red)


def clases_reconfiguracion(
    grafo: Grafo, paleta: int, limites: LimitesOraculo | None = None
) -> list[tuple[Coloracion, ...]]:
    """Clases de equivalencia de Kempe de las coloraciones propias con `paleta` colores."""
    reconfiguracion = grafo_reconfiguracion(grafo, paleta, limites)
    return [tuple(reconfiguracion.coloraciones[i] for i in clase) for clase in reconfiguracion.clases()]


def traza_mas_corta(
    grafo: Grafo,
    paleta: int,
    origen: Coloracion,
    destino: Coloracion,
    limites: LimitesOraculo | None = None,
) -> Traza | None:
    """Traza de longitud mínima (la lexicográficamente menor) o None si están en clases distintas."""
    _verificar_guarda(grafo, limites)
    for coloracion in (origen, destino):
        if not es_propia(grafo, coloracion):
            raise ErrorFormato("El oráculo sólo acepta coloraciones propias", codigo="COLORACION_IMPROPIA")
    origen = origen.con_paleta(paleta)
    objetivo = destino.colores
    resultado = _recorrer(origen, lambda coloracion: coloracion.colores == objetivo, None, None, ())
    return None if resultado is None else resultado[1]


def buscar(
    origen: Coloracion,
    meta: Meta,
    presupuesto: PresupuestoBusqueda | None = None,
    congelados: Iterable[int] = (),
) -> tuple[Coloracion, Traza]:
    """Búsqueda en anchura acotada hasta la primera coloración que cumple `meta`.

    Los pares de colores que tocan `congelados` no se exploran.

    Raises:
        ErrorPresupuestoAgotado: Si se agotan los estados, la profundidad o el espacio alcanzable.
    """
    limites = presupuesto or presupuesto_por_defecto()
    resultado = _recorrer(origen, meta, limites.max_estados, limites.max_profundidad, tuple(congelados))
    if resultado is None:
        raise ErrorPresupuestoAgotado(
            f"Sin meta alcanzable con profundidad ≤ {limites.max_profundidad} y ≤ {limites.max_estados} estados"
        )
    return resultado


def _recorrer(
    origen: Coloracion,
    meta: Meta,
    max_estados: int | None,
    max_profundidad: int | None,
    congelados: tuple[int, ...],
) -> tuple[Coloracion, Traza] | None:
    if meta(origen):
        return origen, ()
    if max_estados is not None and max_estados < 1:
        raise ErrorPresupuestoAgotado(f"El presupuesto de {max_estados} estados no permite explorar")
    padres: dict[Vector, tuple[Vector, RegistroIntercambio] | None] = {origen.colores: None}
    cola: deque[tuple[Coloracion, int]] = deque([(origen, 0)])
    while cola:
        actual, profundidad = cola.popleft()
        if max_profundidad is not None and profundidad >= max_profundidad:
            continue
        for registro, vecino in vecinos_kempe(actual, congelados):
            if vecino.colores in padres:
                continue
            padres[vecino.colores] = (actual.colores, registro)
            if meta(vecino):
                return vecino, _reconstruir(padres, vecino.colores)
            if max_estados is not None and len(padres) >= max_estados:
                raise ErrorPresupuestoAgotado(f"Se visitaron {len(padres)} coloraciones sin alcanzar la meta")
            cola.append((vecino, profundidad + 1))
    return None


def _reconstruir(padres: dict[Vector, tuple[Vector, RegistroIntercambio] | None], final: Vector) -> Traza:
    registros: list[RegistroIntercambio] = []
    actual = padres[final]
    while actual is not None:
        previo, registro = actual
        registros.append(registro)
        actual = padres[previo]
    return tuple(reversed(registros))


def generar_corpus(
    max_vertices: int = MAX_VERTICES_CORPUS,
    max_aristas: int = MAX_ARISTAS_CORPUS,
) -> list[tuple[str, Grafo]]:
    """Grafos simples conexos con 1..max_aristas aristas y ≤ max_vertices vértices, del atlas de networkx."""
    corpus: list[tuple[str, Grafo]] = []
    for posicion, grafo_nx in enumerate(nx.graph_atlas_g()):
        if grafo_nx.number_of_nodes() > max_vertices:
            break
        if not 1 <= grafo_nx.number_of_edges() <= max_aristas:
            continue
        if nx.is_connected(grafo_nx):
            corpus.append((f"atlas-{posicion}", Grafo.desde_networkx(grafo_nx)))
    LOG.info("Corpus con %s grafos (≤ %s vértices, ≤ %s aristas)", len(corpus), max_vertices, max_aristas)
    return corpus


def generar_corpus_regular(max_aristas: int = MAX_ARISTAS_CORPUS_REGULAR) -> list[tuple[str, Grafo]]:
    """Grafos conexos χ'-regulares (regulares de grado igual a su índice cromático) del atlas."""
    corpus: list[tuple[str, Grafo]] = []
    for posicion, grafo_nx in enumerate(nx.graph_atlas_g()):
        aristas = grafo_nx.number_of_edges()
        if not 1 <= aristas <= max_aristas or not nx.is_connected(grafo_nx) or not nx.is_regular(grafo_nx):
            continue
        grafo = Grafo.desde_networkx(grafo_nx)
        if indice_cromatico(grafo) == grafo.grado_maximo:
            corpus.append((f"atlas-{posicion}", grafo))
    LOG.info("Corpus regular con %s grafos", len(corpus))
    return corpus


def muestrear_coloraciones(
    inicial: Coloracion,
    cantidad: int,
    semilla: int = 0,
    pasos_entre_muestras: int = 1,
) -> Iterator[Coloracion]:
    """Caminata aleatoria de Kempe desde `inicial`; entrega una coloración cada `pasos_entre_muestras` intercambios."""
    generador = random.Random(semilla)
    actual = inicial
    paleta = inicial.paleta
    if paleta < 2 or not inicial.grafo.aristas:
        for _ in range(cantidad):
            yield actual
        return
    for _ in range(cantidad):
        for _ in range(pasos_entre_muestras):
            a, b = sorted(generador.sample(range(1, paleta + 1), 2))
            candidatas = [arista for arista, color in actual.asignacion.items() if color in (a, b)]
            if not candidatas:
                continue
            cadena = componente(actual, generador.choice(candidatas), a, b)
            actual = intercambiar(actual, cadena)
        yield actual


def _verificar_guarda(grafo: Grafo, limites: LimitesOraculo | None) -> None:
    guarda = limites or limites_por_defecto()
    if len(grafo.aristas) > guarda.max_aristas:
        raise ErrorLimiteOraculo(
            f"El grafo tiene {len(grafo.aristas)} aristas y la guarda del oráculo es {guarda.max_aristas}"
        )


__all__ = [
    "GrafoReconfiguracion",
    "indice_cromatico",
    "coloracion_optima",
    "enumerar_coloraciones",
    "grafo_reconfiguracion",
    "clases_reconfiguracion",
    "traza_mas_corta",
    "buscar",
    "generar_corpus",
    "generar_corpus_regular",
    "muestrear_coloraciones",
]
