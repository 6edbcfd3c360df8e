"""Representación de grafos y coloraciones de aristas, lectura de archivos y clasificación buena/mala/fea.

Los grafos son simples y no dirigidos, con vértices enteros densos desde 0. Las aristas se guardan
como pares ``(menor, mayor)`` y los colores son enteros desde 1. Todos los valores son inmutables:
recolorear produce una `Coloracion` nueva.
"""

from __future__ import annotations

import importlib
import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from pathlib import Path
from typing import Collection, Iterable, Iterator, Mapping, Protocol, cast

import networkx as nx

from .constantes import CARACTER_COMENTARIO, ENCABEZADO_PALETA, ENCABEZADO_VERTICES
from .errores import ErrorFormato, ErrorRegimen

Arista = tuple[int, int]

LOG = logging.getLogger(__name__)


class _ModuloChardet(Protocol):
    """Contrato mínimo requerido del módulo chardet (detecta codificaciones)."""

    def detect(self, data: bytes, **kwargs: object) -> dict[str, object]:
        ...


def normalizar_arista(u: int, v: int) -> Arista:
    """Ordena los extremos para que toda arista tenga una única representación."""
    return (u, v) if u <= v else (v, u)


def otro_extremo(arista: Arista, v: int) -> int:
    """Devuelve el extremo de `arista` distinto de `v`."""
    u, w = arista
    if v == u:
        return w
    if v == w:
        return u
    raise ValueError(f"El vértice {v} no es extremo de la arista {arista}")


@dataclass(frozen=True)
class Grafo:
    """Grafo simple no dirigido con `num_vertices` vértices y aristas normalizadas."""

    num_vertices: int
    aristas: frozenset[Arista]

    def __post_init__(self) -> None:
        if self.num_vertices < 0:
            raise ErrorFormato("La cantidad de vértices no puede ser negativa", codigo="VERTICES_NEGATIVOS")
        for u, v in self.aristas:
            if u == v:
                raise ErrorFormato(f"Lazo en el vértice {u}", codigo="LAZO")
            if u > v:
                raise ErrorFormato(f"Arista no normalizada: {(u, v)}", codigo="ARISTA_NO_NORMALIZADA")
            if u < 0 or v >= self.num_vertices:
                raise ErrorFormato(
                    f"La arista {(u, v)} usa un vértice fuera de [0, {self.num_vertices})",
                    codigo="VERTICE_FUERA_DE_RANGO",
                )

    @classmethod
    def desde_aristas(cls, aristas: Iterable[tuple[int, int]], num_vertices: int | None = None) -> "Grafo":
        """Construye un grafo detectando lazos y aristas duplicadas.

        Si `num_vertices` es None se infiere como 1 + el mayor identificador visto.
        """
        vistas: set[Arista] = set()
        for u, v in aristas:
            if u == v:
                raise ErrorFormato(f"Lazo en el vértice {u}", codigo="LAZO")
            arista = normalizar_arista(int(u), int(v))
            if arista in vistas:
                raise ErrorFormato(f"Arista duplicada {arista}", codigo="ARISTA_DUPLICADA")
            vistas.add(arista)
        mayor = max((v for _, v in vistas), default=-1)
        total = mayor + 1 if num_vertices is None else num_vertices
        return cls(num_vertices=total, aristas=frozenset(vistas))

    @classmethod
    def desde_networkx(cls, grafo_nx: nx.Graph) -> "Grafo":
        """Convierte un grafo de networkx reetiquetando sus nodos en orden a 0..n-1."""
        orden = {nodo: indice for indice, nodo in enumerate(sorted(grafo_nx.nodes()))}
        return cls.desde_aristas(
            ((orden[u], orden[v]) for u, v in grafo_nx.edges()),
            num_vertices=len(orden),
        )

    def a_networkx(self) -> nx.Graph:
        """Entrega una copia como `networkx.Graph` (incluye vértices aislados)."""
        grafo_nx = nx.Graph()
        grafo_nx.add_nodes_from(range(self.num_vertices))
        grafo_nx.add_edges_from(self.aristas_ordenadas)
        return grafo_nx

    @cached_property
    def aristas_ordenadas(self) -> tuple[Arista, ...]:
        return tuple(sorted(self.aristas))

    @cached_property
    def indice_arista(self) -> dict[Arista, int]:
        return {arista: indice for indice, arista in enumerate(self.aristas_ordenadas)}

    @cached_property
    def _incidencias(self) -> tuple[tuple[Arista, ...], ...]:
        por_vertice: list[list[Arista]] = [[] for _ in range(self.num_vertices)]
        for arista in self.aristas_ordenadas:
            u, v = arista
            por_vertice[u].append(arista)
            por_vertice[v].append(arista)
        return tuple(
            tuple(sorted(lista, key=lambda arista, v=v: otro_extremo(arista, v)))
            for v, lista in enumerate(por_vertice)
        )

    def incidentes(self, v: int) -> tuple[Arista, ...]:
        """Aristas incidentes a `v`, ordenadas por el otro extremo."""
        self._validar_vertice(v)
        return self._incidencias[v]

    def vecinos(self, v: int) -> tuple[int, ...]:
        return tuple(otro_extremo(arista, v) for arista in self.incidentes(v))

    def grado(self, v: int) -> int:
        return len(self.incidentes(v))

    @cached_property
    def grado_maximo(self) -> int:
        return max((len(lista) for lista in self._incidencias), default=0)

    @cached_property
    def grado_minimo(self) -> int:
        return min((len(lista) for lista in self._incidencias), default=0)

    def es_regular(self, grado: int | None = None) -> bool:
        """Indica si todos los vértices tienen el mismo grado (y, si se indica, igual a `grado`)."""
        if self.num_vertices == 0:
            return True
        if self.grado_minimo != self.grado_maximo:
            return False
        return grado is None or self.grado_maximo == grado

    def contiene(self, arista: tuple[int, int]) -> bool:
        return normalizar_arista(*arista) in self.aristas

    def _validar_vertice(self, v: int) -> None:
        if not 0 <= v < self.num_vertices:
            raise ValueError(f"El vértice {v} no pertenece al grafo de {self.num_vertices} vértices")


@dataclass(frozen=True)
class Coloracion:
    """Asignación total arista → color en [1..paleta] sobre un grafo.

    `colores` sigue el orden de `grafo.aristas_ordenadas`, así dos coloraciones iguales tienen el
    mismo vector de colores (igualdad exacta, sin cociente por permutaciones de colores).
    """

    grafo: Grafo
    paleta: int
    colores: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.paleta < 0:
            raise ErrorFormato("La paleta no puede ser negativa", codigo="PALETA_NEGATIVA")
        if len(self.colores) != len(self.grafo.aristas):
            raise ErrorFormato(
                f"Se esperaban {len(self.grafo.aristas)} colores y llegaron {len(self.colores)}",
                codigo="ASIGNACION_INCOMPLETA",
            )
        for arista, color in zip(self.grafo.aristas_ordenadas, self.colores):
            if not 1 <= color <= self.paleta:
                raise ErrorFormato(
                    f"La arista {arista} tiene el color {color}, fuera de [1..{self.paleta}]",
                    codigo="COLOR_FUERA_DE_PALETA",
                )

    @classmethod
    def desde_mapa(cls, grafo: Grafo, paleta: int, asignacion: Mapping[tuple[int, int], int]) -> "Coloracion":
        """Construye la coloración exigiendo que cubra exactamente las aristas del grafo."""
        normalizada = {normalizar_arista(*arista): int(color) for arista, color in asignacion.items()}
        sobrantes = set(normalizada).difference(grafo.aristas)
        if sobrantes:
            raise ErrorFormato(
                f"La asignación colorea aristas ausentes del grafo: {sorted(sobrantes)}",
                codigo="ARISTA_DESCONOCIDA",
            )
        faltantes = [arista for arista in grafo.aristas_ordenadas if arista not in normalizada]
        if faltantes:
            raise ErrorFormato(
                f"La asignación no colorea las aristas {faltantes}",
                codigo="ARISTA_FALTANTE",
            )
        return cls(grafo=grafo, paleta=paleta, colores=tuple(normalizada[a] for a in grafo.aristas_ordenadas))

    @cached_property
    def asignacion(self) -> dict[Arista, int]:
        return dict(zip(self.grafo.aristas_ordenadas, self.colores))

    def color(self, arista: tuple[int, int]) -> int:
        clave = normalizar_arista(*arista)
        indice = self.grafo.indice_arista.get(clave)
        if indice is None:
            raise ErrorFormato(f"La arista {clave} no pertenece al grafo", codigo="ARISTA_DESCONOCIDA")
        return self.colores[indice]

    @cached_property
    def _aristas_por_color(self) -> tuple[dict[int, Arista], ...]:
        mapas: list[dict[int, Arista]] = [{} for _ in range(self.grafo.num_vertices)]
        for arista, color in zip(self.grafo.aristas_ordenadas, self.colores):
            for extremo in arista:
                mapas[extremo].setdefault(color, arista)
        return tuple(mapas)

    @cached_property
    def _faltantes(self) -> tuple[frozenset[int], ...]:
        todos = frozenset(range(1, self.paleta + 1))
        return tuple(todos.difference(mapa) for mapa in self._aristas_por_color)

    def faltantes(self, v: int) -> frozenset[int]:
        """Colores de la paleta que no aparecen en aristas incidentes a `v`."""
        self.grafo._validar_vertice(v)
        return self._faltantes[v]

    def faltante(self, v: int) -> int:
        """Color faltante m(v); exige que `v` tenga exactamente uno."""
        faltantes = self.faltantes(v)
        if len(faltantes) != 1:
            raise ErrorRegimen(
                f"El vértice {v} tiene {len(faltantes)} colores faltantes y se esperaba exactamente uno"
            )
        return next(iter(faltantes))

    @cached_property
    def un_solo_faltante(self) -> bool:
        """Verdadero si cada vértice tiene exactamente un color faltante."""
        return all(len(faltantes) == 1 for faltantes in self._faltantes)

    def arista_de_color(self, v: int, color: int) -> Arista | None:
        """Arista incidente a `v` con el color dado, o None."""
        self.grafo._validar_vertice(v)
        return self._aristas_por_color[v].get(color)

    def con_cambios(self, cambios: Mapping[Arista, int]) -> "Coloracion":
        """Devuelve una coloración nueva con los colores indicados reemplazados."""
        if not cambios:
            return self
        colores = list(self.colores)
        for arista, color in cambios.items():
            indice = self.grafo.indice_arista.get(normalizar_arista(*arista))
            if indice is None:
                raise ErrorFormato(f"La arista {arista} no pertenece al grafo", codigo="ARISTA_DESCONOCIDA")
            colores[indice] = color
        return Coloracion(grafo=self.grafo, paleta=self.paleta, colores=tuple(colores))

    def con_paleta(self, paleta: int) -> "Coloracion":
        """Misma asignación vista con otra paleta (p. ej. un color extra sin usar)."""
        return Coloracion(grafo=self.grafo, paleta=paleta, colores=self.colores)

    @property
    def colores_usados(self) -> frozenset[int]:
        return frozenset(self.colores)


class ClaseArista(str, Enum):
    """Clasificación de una arista respecto de un emparejamiento objetivo M y un color c."""

    BUENA = "buena"
    MALA = "mala"
    FEA = "fea"
    NEUTRA = "neutra"


def interpretar_grafo(texto: str | bytes) -> Grafo:
    """Interpreta un grafo en formato de lista de aristas.

    Parámetros
    ----------
    texto : str | bytes
        Líneas ``u v`` con identificadores decimales; se admiten comentarios ``#``, líneas en
        blanco y un encabezado opcional ``vertices N`` para declarar vértices aislados al final.

    Retorna
    -------
    Grafo
        Grafo con ``1 + mayor identificador`` vértices (o N si el encabezado es mayor).
    """
    aristas: list[tuple[int, int]] = []
    declarados: int | None = None
    for numero, campos in _lineas_utiles(texto):
        if campos[0].lower() == ENCABEZADO_VERTICES:
            if declarados is not None:
                raise ErrorFormato(f"Línea {numero}: encabezado '{ENCABEZADO_VERTICES}' repetido", codigo="LINEA_MAL_FORMADA")
            declarados = _entero_no_negativo(campos, 1, numero, esperados=2)
            continue
        u = _entero_no_negativo(campos, 0, numero, esperados=2)
        v = _entero_no_negativo(campos, 1, numero, esperados=2)
        if u == v:
            raise ErrorFormato(f"Línea {numero}: lazo en el vértice {u}", codigo="LAZO")
        aristas.append((u, v))

    try:
        grafo = Grafo.desde_aristas(aristas)
    except ErrorFormato as error:
        raise ErrorFormato(f"Grafo inválido: {error.detalle}", codigo=error.codigo) from error

    if declarados is not None:
        if declarados < grafo.num_vertices:
            raise ErrorFormato(
                f"Se declararon {declarados} vértices pero las aristas usan {grafo.num_vertices}",
                codigo="VERTICE_FUERA_DE_RANGO",
            )
        grafo = Grafo(num_vertices=declarados, aristas=grafo.aristas)
    return grafo


def interpretar_coloracion(texto: str | bytes, grafo: Grafo, paleta: int | None = None) -> Coloracion:
    """Interpreta líneas ``u v c`` como coloración total de `grafo`.

    La paleta se toma, en orden, del argumento, del encabezado opcional ``paleta K`` o del mayor
    color usado.
    """
    asignacion: dict[Arista, int] = {}
    paleta_declarada: int | None = None
    for numero, campos in _lineas_utiles(texto):
        if campos[0].lower() == ENCABEZADO_PALETA:
            paleta_declarada = _entero_no_negativo(campos, 1, numero, esperados=2)
            continue
        u = _entero_no_negativo(campos, 0, numero, esperados=3)
        v = _entero_no_negativo(campos, 1, numero, esperados=3)
        color = _entero_no_negativo(campos, 2, numero, esperados=3)
        arista = normalizar_arista(u, v)
        if arista in asignacion:
            raise ErrorFormato(f"Línea {numero}: la arista {arista} se colorea dos veces", codigo="ARISTA_DUPLICADA")
        asignacion[arista] = color

    paleta_final = paleta if paleta is not None else paleta_declarada
    if paleta_final is None:
        paleta_final = max(asignacion.values(), default=0)
    return Coloracion.desde_mapa(grafo, paleta_final, asignacion)


def cargar_grafo(ruta_archivo: Path | str) -> Grafo:
    """Carga un grafo desde disco detectando la codificación con chardet."""
    return interpretar_grafo(leer_texto(_asegurar_path(ruta_archivo), "grafo"))


def cargar_coloracion(ruta_archivo: Path | str, grafo: Grafo, paleta: int | None = None) -> Coloracion:
    """Carga una coloración de `grafo` desde disco."""
    return interpretar_coloracion(leer_texto(_asegurar_path(ruta_archivo), "coloración"), grafo, paleta)


def serializar_grafo(grafo: Grafo) -> str:
    """Escribe el grafo con encabezado ``vertices N`` y aristas ordenadas."""
    lineas = [f"{ENCABEZADO_VERTICES} {grafo.num_vertices}"]
    lineas.extend(f"{u} {v}" for u, v in grafo.aristas_ordenadas)
    return "\n".join(lineas) + "\n"


def serializar_coloracion(coloracion: Coloracion) -> str:
    """Escribe la coloración con encabezado ``paleta K`` y líneas ``u v c`` ordenadas."""
    lineas = [f"{ENCABEZADO_PALETA} {coloracion.paleta}"]
    lineas.extend(f"{u} {v} {c}" for (u, v), c in zip(coloracion.grafo.aristas_ordenadas, coloracion.colores))
    return "\n".join(lineas) + "\n"


def es_propia(grafo: Grafo, coloracion: Coloracion) -> bool:
    """Indica si ninguna pareja de aristas con un vértice común comparte color.

    Raises:
        ErrorFormato: Si la asignación no cubre alguna arista de `grafo`.
    """
    if coloracion.grafo is not grafo and coloracion.grafo != grafo:
        ausentes = [arista for arista in grafo.aristas_ordenadas if arista not in coloracion.grafo.aristas]
        if ausentes:
            raise ErrorFormato(f"La asignación no colorea las aristas {ausentes}", codigo="ARISTA_FALTANTE")
    for v in range(grafo.num_vertices):
        colores = [coloracion.color(arista) for arista in grafo.incidentes(v)]
        if len(colores) != len(set(colores)):
            return False
    return True


def colores_faltantes(coloracion: Coloracion, v: int) -> frozenset[int]:
    """[1..k] menos los colores de las aristas incidentes a `v`."""
    return coloracion.faltantes(v)


def clasificar_arista(
    coloracion: Coloracion,
    emparejamiento: Collection[tuple[int, int]],
    color_objetivo: int,
    arista: tuple[int, int],
) -> ClaseArista:
    """Clasifica `arista` como buena, mala, fea o neutra respecto de (M, color_objetivo)."""
    clave = normalizar_arista(*arista)
    if clave not in coloracion.grafo.aristas:
        raise ErrorFormato(f"La arista {clave} no pertenece al grafo", codigo="ARISTA_DESCONOCIDA")
    en_m = clave in _normalizar_conjunto(emparejamiento)
    tiene_color = coloracion.color(clave) == color_objetivo
    if en_m:
        return ClaseArista.BUENA if tiene_color else ClaseArista.MALA
    return ClaseArista.FEA if tiene_color else ClaseArista.NEUTRA


def conteo_clases(
    coloracion: Coloracion,
    emparejamiento: Collection[tuple[int, int]],
    color_objetivo: int,
) -> Counter[ClaseArista]:
    """Cuenta cuántas aristas caen en cada clase; cada arista cae en exactamente una."""
    conjunto = _normalizar_conjunto(emparejamiento)
    conteo: Counter[ClaseArista] = Counter()
    for arista, color in zip(coloracion.grafo.aristas_ordenadas, coloracion.colores):
        if arista in conjunto:
            conteo[ClaseArista.BUENA if color == color_objetivo else ClaseArista.MALA] += 1
        else:
            conteo[ClaseArista.FEA if color == color_objetivo else ClaseArista.NEUTRA] += 1
    return conteo


def vertices_libres(coloracion: Coloracion, color_objetivo: int) -> frozenset[int]:
    """Vértices a los que les falta `color_objetivo` (vértices libres)."""
    return frozenset(v for v in range(coloracion.grafo.num_vertices) if color_objetivo in coloracion.faltantes(v))


def _normalizar_conjunto(aristas: Collection[tuple[int, int]]) -> frozenset[Arista]:
    if isinstance(aristas, frozenset):
        return cast(frozenset[Arista], aristas)
    return frozenset(normalizar_arista(*arista) for arista in aristas)


def _lineas_utiles(texto: str | bytes) -> Iterator[tuple[int, list[str]]]:
    """Recorre las líneas no vacías sin comentarios, con su número (desde 1)."""
    if isinstance(texto, bytes):
        texto = texto.decode("utf-8-sig")
    for numero, linea in enumerate(texto.splitlines(), start=1):
        contenido = linea.split(CARACTER_COMENTARIO, 1)[0].strip()
        if contenido:
            yield numero, contenido.split()


def _entero_no_negativo(campos: list[str], posicion: int, numero: int, *, esperados: int) -> int:
    if len(campos) != esperados:
        raise ErrorFormato(
            f"Línea {numero}: se esperaban {esperados} campos y hay {len(campos)}: {' '.join(campos)!r}",
            codigo="LINEA_MAL_FORMADA",
        )
    valor = campos[posicion]
    if not (valor.isascii() and valor.isdecimal()):
        raise ErrorFormato(f"Línea {numero}: {valor!r} no es un entero no negativo", codigo="LINEA_MAL_FORMADA")
    return int(valor)


def _asegurar_path(ruta: Path | str) -> Path:
    """Convierte la entrada a Path para manejar rutas de forma uniforme."""
    return ruta if isinstance(ruta, Path) else Path(ruta)


def leer_texto(ruta: Path, descripcion: str) -> str:
    """Lee un archivo de texto detectando su codificación con chardet."""
    if not ruta.exists():
        raise FileNotFoundError(f"No se encontró el archivo de {descripcion} en {ruta}")
    contenido = ruta.read_bytes()
    codificacion = _detectar_codificacion(contenido)
    LOG.debug("Leyendo %s desde %s con codificación %s", descripcion, ruta, codificacion)
    return contenido.decode(codificacion)


def _detectar_codificacion(muestra: bytes) -> str:
    """Determina la codificación del archivo; UTF-8 si chardet no está o no decide."""
    modulo_chardet = _obtener_modulo_chardet()
    if modulo_chardet is None or not muestra:
        return "utf-8-sig"

    resultado = modulo_chardet.detect(muestra)
    encoding = cast(str | None, resultado.get("encoding")) if isinstance(resultado, dict) else None
    if encoding is None or encoding.lower() in {"ascii", "utf-8"}:
        return "utf-8-sig"
    return encoding


def _obtener_modulo_chardet() -> _ModuloChardet | None:
    """Carga perezosamente el módulo chardet para evitar importaciones duras en tiempo de carga."""
    try:
        return cast(_ModuloChardet, importlib.import_module("chardet"))
    except ImportError:
        return None


__all__ = [
    "Arista",
    "Grafo",
    "Coloracion",
    "ClaseArista",
    "normalizar_arista",
    "otro_extremo",
    "interpretar_grafo",
    "interpretar_coloracion",
    "cargar_grafo",
    "cargar_coloracion",
    "leer_texto",
    "serializar_grafo",
    "serializar_coloracion",
    "es_propia",
    "colores_faltantes",
    "clasificar_arista",
    "conteo_clases",
    "vertices_libres",
]
