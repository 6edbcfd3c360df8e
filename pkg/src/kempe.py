"""Cadenas de Kempe, intercambios y trazas reproducibles.

Una cadena K_x(a, b) es la componente conexa que contiene a x del subgrafo formado por las
aristas de color a o b. En una coloración propia siempre es un camino o un ciclo par, así que
intercambiar sus dos colores produce otra coloración propia.

Las trazas guardan sólo el par de colores y un ancla; la cadena se recalcula al reproducir.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from pathlib import Path
from typing import Iterable, Iterator, Union

from pydantic import ValidationError

from .errores import ErrorCadenaObsoleta, ErrorFormato
from .modelos import AnclaModelo, RegistroTrazaModelo
from .nucleo import Arista, Coloracion, leer_texto, normalizar_arista, otro_extremo

LOG = logging.getLogger(__name__)

Ancla = Union[int, Arista]


class FormaCadena(str, Enum):
    """Forma de una cadena bicromática."""

    CAMINO = "camino"
    CICLO_PAR = "ciclo_par"


@dataclass(frozen=True)
class Cadena:
    """Componente bicromática maximal.

    `colores` se guarda ordenado; `extremos` está vacío para un ciclo, trae los dos extremos
    ordenados para un camino con aristas y repite el vértice ancla para la cadena vacía.
    """

    colores: tuple[int, int]
    aristas: frozenset[Arista]
    vertices: frozenset[int]
    forma: FormaCadena
    extremos: tuple[int, ...]
    origen: Ancla

    @property
    def es_vacia(self) -> bool:
        return not self.aristas

    def contiene(self, vertice: int) -> bool:
        return vertice in self.vertices


@dataclass(frozen=True)
class RegistroIntercambio:
    """Un paso de traza: par de colores y ancla (arista mínima de la cadena o vértice si es vacía)."""

    colores: tuple[int, int]
    ancla: Ancla

    @property
    def es_vertice(self) -> bool:
        return isinstance(self.ancla, int)


Traza = tuple[RegistroIntercambio, ...]


def componente(coloracion: Coloracion, ancla: Ancla, a: int, b: int) -> Cadena:
    """Calcula la cadena K_ancla(a, b).

    Args:
        coloracion: Coloración vigente.
        ancla: Vértice o arista. Si es arista, su color debe ser a o b.
        a: Primer color.
        b: Segundo color, distinto de `a`.

    Returns:
        La componente maximal con su forma y extremos.

    Raises:
        ErrorFormato: Si a == b o el ancla no pertenece al grafo.
        ErrorCadenaObsoleta: Si la arista ancla no tiene color a ni b.
    """
    if a == b:
        raise ErrorFormato(f"Una cadena necesita dos colores distintos; llegó ({a}, {b})", codigo="PAR_INVALIDO")
    grafo = coloracion.grafo
    par = (min(a, b), max(a, b))

    if isinstance(ancla, int):
        if not 0 <= ancla < grafo.num_vertices:
            raise ErrorFormato(f"El vértice ancla {ancla} no pertenece al grafo", codigo="ANCLA_INVALIDA")
        origen: Ancla = ancla
        pendientes = deque([ancla])
    else:
        arista = normalizar_arista(*ancla)
        if arista not in grafo.aristas:
            raise ErrorFormato(f"La arista ancla {arista} no pertenece al grafo", codigo="ANCLA_INVALIDA")
        color = coloracion.color(arista)
        if color not in par:
            raise ErrorCadenaObsoleta(f"La arista ancla {arista} tiene color {color}, fuera del par {par}")
        origen = arista
        pendientes = deque(arista)

    vertices: set[int] = set(pendientes)
    aristas: set[Arista] = set()
    while pendientes:
        x = pendientes.popleft()
        for color in par:
            arista = coloracion.arista_de_color(x, color)
            if arista is None or arista in aristas:
                continue
            aristas.add(arista)
            y = otro_extremo(arista, x)
            if y not in vertices:
                vertices.add(y)
                pendientes.append(y)

    return _armar_cadena(par, frozenset(aristas), frozenset(vertices), origen)


def _armar_cadena(par: tuple[int, int], aristas: frozenset[Arista], vertices: frozenset[int], origen: Ancla) -> Cadena:
    if not aristas:
        unico = next(iter(vertices))
        return Cadena(par, aristas, vertices, FormaCadena.CAMINO, (unico, unico), origen)
    grados: dict[int, int] = {v: 0 for v in vertices}
    for u, v in aristas:
        grados[u] += 1
        grados[v] += 1
    if all(grado == 2 for grado in grados.values()):
        return Cadena(par, aristas, vertices, FormaCadena.CICLO_PAR, (), origen)
    extremos = tuple(sorted(v for v, grado in grados.items() if grado == 1))
    return Cadena(par, aristas, vertices, FormaCadena.CAMINO, extremos, origen)


def intercambiar(coloracion: Coloracion, cadena: Cadena) -> Coloracion:
    """Intercambia los colores de la cadena.

    Raises:
        ErrorCadenaObsoleta: Si la cadena ya no es una componente de `coloracion`.
    """
    a, b = cadena.colores
    try:
        vigente = componente(coloracion, cadena.origen, a, b)
    except ErrorCadenaObsoleta as error:
        raise ErrorCadenaObsoleta(f"Cadena obsoleta: {error.detalle}") from error
    if vigente.aristas != cadena.aristas:
        raise ErrorCadenaObsoleta(
            f"La cadena {cadena.colores} anclada en {cadena.origen} no coincide con la componente vigente"
        )
    return _aplicar(coloracion, cadena)


def _aplicar(coloracion: Coloracion, cadena: Cadena) -> Coloracion:
    a, b = cadena.colores
    return coloracion.con_cambios({arista: b if coloracion.color(arista) == a else a for arista in cadena.aristas})


def registro_de(cadena: Cadena) -> RegistroIntercambio:
    """Registro reproducible de un intercambio: ancla en la arista mínima o en el vértice si la cadena es vacía."""
    if cadena.aristas:
        return RegistroIntercambio(cadena.colores, min(cadena.aristas))
    return RegistroIntercambio(cadena.colores, cadena.extremos[0])


def intercambiar_desde(coloracion: Coloracion, ancla: Ancla, a: int, b: int) -> tuple[Coloracion, RegistroIntercambio]:
    """Calcula K_ancla(a, b), la intercambia y devuelve la coloración nueva con su registro."""
    cadena = componente(coloracion, ancla, a, b)
    return _aplicar(coloracion, cadena), registro_de(cadena)


def aplicar_registro(coloracion: Coloracion, registro: RegistroIntercambio) -> Coloracion:
    """Aplica un registro de traza sobre la coloración vigente.

    Un ancla de vértice cuya cadena quedó vacía es un paso nulo.
    """
    a, b = registro.colores
    try:
        cadena = componente(coloracion, registro.ancla, a, b)
    except ErrorFormato as error:
        raise ErrorCadenaObsoleta(f"Registro inaplicable: {error.detalle}") from error
    if cadena.es_vacia:
        return coloracion
    return _aplicar(coloracion, cadena)


def pasos_reproduccion(coloracion: Coloracion, traza: Iterable[RegistroIntercambio]) -> Iterator[Coloracion]:
    """Entrega la coloración resultante después de cada registro."""
    actual = coloracion
    for registro in traza:
        actual = aplicar_registro(actual, registro)
        yield actual


def reproducir(coloracion: Coloracion, traza: Iterable[RegistroIntercambio]) -> Coloracion:
    """Aplica la traza en orden y devuelve la coloración final (la misma si la traza es vacía)."""
    actual = coloracion
    for actual in pasos_reproduccion(coloracion, traza):
        pass
    return actual


def invertir_traza(traza: Iterable[RegistroIntercambio]) -> Traza:
    """Cada intercambio es su propio inverso: basta invertir el orden."""
    return tuple(reversed(tuple(traza)))


def vecinos_kempe(
    coloracion: Coloracion,
    congelados: Iterable[int] = (),
) -> Iterator[tuple[RegistroIntercambio, Coloracion]]:
    """Recorre las coloraciones a un intercambio de distancia.

    El orden es (a, b, arista ancla mínima) y se omiten los pares que tocan colores congelados,
    así una búsqueda en anchura que toma el primer descubrimiento da la traza lexicográficamente
    menor entre las más cortas.
    """
    fijos = frozenset(congelados)
    libres = [color for color in range(1, coloracion.paleta + 1) if color not in fijos]
    for a, b in combinations(libres, 2):
        visitadas: set[Arista] = set()
        for arista, color in zip(coloracion.grafo.aristas_ordenadas, coloracion.colores):
            if color not in (a, b) or arista in visitadas:
                continue
            cadena = componente(coloracion, arista, a, b)
            visitadas.update(cadena.aristas)
            yield RegistroIntercambio((a, b), arista), _aplicar(coloracion, cadena)


def identicas_en(primera: Coloracion, segunda: Coloracion, elementos: Iterable[Ancla]) -> bool:
    """Indica si dos coloraciones coinciden en X: mismo color en cada arista y mismos faltantes en cada vértice."""
    for elemento in elementos:
        if isinstance(elemento, int):
            if primera.faltantes(elemento) != segunda.faltantes(elemento):
                return False
        elif primera.color(elemento) != segunda.color(elemento):
            return False
    return True


def secuencia_vertices(cadena: Cadena, inicio: int | None = None) -> tuple[int, ...]:
    """Vértices de la cadena en el orden en que se recorren.

    Un camino se recorre desde `inicio` (uno de sus extremos, por defecto el menor). Un ciclo
    parte de `inicio` (por defecto su menor vértice) y sigue hacia el vecino de menor identificador.
    """
    if cadena.es_vacia:
        return (cadena.extremos[0],)
    vecinos: dict[int, list[int]] = {v: [] for v in cadena.vertices}
    for u, v in sorted(cadena.aristas):
        vecinos[u].append(v)
        vecinos[v].append(u)

    if cadena.forma is FormaCadena.CAMINO:
        primero = cadena.extremos[0] if inicio is None else inicio
        if primero not in cadena.extremos:
            raise ValueError(f"El vértice {primero} no es extremo del camino {cadena.extremos}")
    else:
        primero = min(cadena.vertices) if inicio is None else inicio
        if primero not in cadena.vertices:
            raise ValueError(f"El vértice {primero} no pertenece al ciclo")

    orden = [primero]
    anterior: int | None = None
    actual = primero
    while True:
        candidatos = sorted(w for w in vecinos[actual] if w != anterior)
        if not candidatos or (len(orden) > 1 and candidatos[0] == primero):
            break
        anterior, actual = actual, candidatos[0]
        if actual == primero:
            break
        orden.append(actual)
    return tuple(orden)


def serializar_traza(traza: Iterable[RegistroIntercambio]) -> str:
    """Escribe la traza como líneas JSON ``{"a":..,"b":..,"anchor":{...}}``."""
    lineas = []
    for registro in traza:
        a, b = registro.colores
        if isinstance(registro.ancla, int):
            ancla = AnclaModelo(vertice=registro.ancla)
        else:
            ancla = AnclaModelo(arista=registro.ancla)
        modelo = RegistroTrazaModelo(a=a, b=b, ancla=ancla)
        lineas.append(modelo.model_dump_json(by_alias=True, exclude_none=True))
    return "".join(f"{linea}\n" for linea in lineas)


def interpretar_traza(texto: str | bytes) -> Traza:
    """Lee una traza en formato de líneas JSON; las líneas en blanco se ignoran."""
    if isinstance(texto, bytes):
        texto = texto.decode("utf-8-sig")
    registros: list[RegistroIntercambio] = []
    for numero, linea in enumerate(texto.splitlines(), start=1):
        if not linea.strip():
            continue
        try:
            modelo = RegistroTrazaModelo.model_validate_json(linea)
        except ValidationError as error:
            raise ErrorFormato(f"Línea {numero} de la traza inválida: {error}", codigo="TRAZA_INVALIDA") from error
        ancla: Ancla
        if modelo.ancla.arista is not None:
            ancla = normalizar_arista(*modelo.ancla.arista)
        else:
            assert modelo.ancla.vertice is not None
            ancla = int(modelo.ancla.vertice)
        registros.append(RegistroIntercambio((modelo.a, modelo.b), ancla))
    return tuple(registros)


def cargar_traza(ruta_archivo: Path | str) -> Traza:
    return interpretar_traza(leer_texto(Path(ruta_archivo), "traza"))


def guardar_traza(traza: Iterable[RegistroIntercambio], ruta_archivo: Path | str) -> Path:
    """Guarda la traza en disco, creando la carpeta de destino si hace falta."""
    ruta = Path(ruta_archivo)
    ruta.parent.mkdir(parents=True, exist_ok=True)
    ruta.write_text(serializar_traza(traza), encoding="utf-8")
    LOG.info("Traza guardada en %s", ruta)
    return ruta


__all__ = [
    "Ancla",
    "FormaCadena",
    "Cadena",
    "RegistroIntercambio",
    "Traza",
    "componente",
    "intercambiar",
    "intercambiar_desde",
    "registro_de",
    "aplicar_registro",
    "pasos_reproduccion",
    "reproducir",
    "invertir_traza",
    "vecinos_kempe",
    "identicas_en",
    "secuencia_vertices",
    "serializar_traza",
    "interpretar_traza",
    "cargar_traza",
    "guardar_traza",
]
