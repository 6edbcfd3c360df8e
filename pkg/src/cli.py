"""Interfaz de línea de comandos del motor de Kempe.

Subcomandos: ``color``, ``chromatic-index``, ``fan``, ``transform``, ``verify-trace``,
``explore`` y ``regularize``. Códigos de salida: 0 éxito, 1 uso o lectura, 2 presupuesto agotado,
3 la verificación no coincide.
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

from config.presupuestos import LimitesOraculo, PresupuestoBusqueda

from .abanicos import FormaAbanico, construir_abanico, es_ajustado, esta_saturado
from .analytics.corpus import guardar_tabla, resumen_clases
from .coloreo import colorear_vizing
from .configuracion import obtener_configuracion
from .errores import ErrorFormato, ErrorMotorKempe, ErrorPresupuestoAgotado
from .kempe import Traza, cargar_traza, guardar_traza, pasos_reproduccion, serializar_traza
from .nucleo import Coloracion, Grafo, cargar_coloracion, cargar_grafo, es_propia, serializar_coloracion, serializar_grafo
from .oraculo import coloracion_optima, grafo_reconfiguracion, indice_cromatico, muestrear_coloraciones
from .regularizacion import regularizar
from .transformacion import equivalencia, hacia_objetivo

LOG = logging.getLogger(__name__)

SALIDA_OK = 0
SALIDA_USO = 1
SALIDA_PRESUPUESTO = 2
SALIDA_VERIFICACION = 3


class _ErrorUso(Exception):
    """Argumentos inválidos en la línea de comandos."""


class _Analizador(argparse.ArgumentParser):
    """ArgumentParser que reporta los errores de uso con una excepción en lugar de terminar el proceso."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        raise _ErrorUso(message)


@dataclass(frozen=True)
class Verificacion:
    """Resultado de reproducir una traza contra la coloración esperada."""

    valida: bool
    detalle: str
    pasos: int = 0

    def __bool__(self) -> bool:
        return self.valida


def verificar_traza(grafo: Grafo, inicio: Coloracion, traza: Traza, esperado: Coloracion) -> Verificacion:
    """Reproduce la traza comprobando que cada paso sea propio y que el final coincida arista por arista."""
    if not es_propia(grafo, inicio):
        return Verificacion(False, "La coloración de partida no es propia")
    actual = inicio
    paso = 0
    try:
        for paso, actual in enumerate(pasos_reproduccion(inicio, traza), start=1):
            if not es_propia(grafo, actual):
                return Verificacion(False, f"El paso {paso} produjo una coloración impropia", paso)
    except ErrorMotorKempe as error:
        return Verificacion(False, f"El paso {paso + 1} no se pudo reproducir: {error.detalle}", paso)

    distintas = [
        arista
        for arista in grafo.aristas_ordenadas
        if actual.color(arista) != esperado.color(arista)
    ]
    if distintas:
        primera = distintas[0]
        return Verificacion(
            False,
            f"{len(distintas)} aristas difieren; la primera es {primera[0]}-{primera[1]} "
            f"con color {actual.color(primera)} en lugar de {esperado.color(primera)}",
            paso,
        )
    return Verificacion(True, f"Traza válida de {len(traza)} intercambios", paso)


def construir_analizador() -> argparse.ArgumentParser:
    comunes = argparse.ArgumentParser(add_help=False)
    comunes.add_argument("--verbose", action="store_true", help="Muestra el registro de nivel INFO en stderr.")
    comunes.add_argument("--max-states", type=int, default=None, help="Coloraciones máximas por búsqueda acotada.")
    comunes.add_argument("--max-depth", type=int, default=None, help="Profundidad máxima por búsqueda acotada.")
    comunes.add_argument("--seed", type=int, default=None, help="Semilla para las funciones aleatorizadas.")

    analizador = _Analizador(prog="kempe", description="Motor de reconfiguración de Kempe para coloraciones de aristas.")
    subcomandos = analizador.add_subparsers(dest="comando", required=True, parser_class=_Analizador)

    color = subcomandos.add_parser("color", parents=[comunes], help="Colorea las aristas de un grafo.")
    color.add_argument("--graph", required=True, type=Path)
    color.add_argument("--optimo", action="store_true", help="Usa χ' colores (backtracking) en vez de Δ+1.")
    color.add_argument("-k", type=int, default=None, help="Paleta de la coloración entregada.")
    color.add_argument("--walk", type=int, default=0, help="Intercambios aleatorios aplicados tras colorear.")
    color.add_argument("--out", type=Path, default=None)

    indice = subcomandos.add_parser("chromatic-index", parents=[comunes], help="Calcula el índice cromático.")
    indice.add_argument("--graph", required=True, type=Path)

    abanico = subcomandos.add_parser("fan", parents=[comunes], help="Construye un abanico de Vizing.")
    abanico.add_argument("--graph", required=True, type=Path)
    abanico.add_argument("--from", dest="desde", required=True, type=Path)
    abanico.add_argument("--center", required=True, type=int)
    abanico.add_argument("--start", required=True, type=int, help="Otro extremo de la arista inicial.")
    abanico.add_argument("-k", type=int, default=None)

    transformar = subcomandos.add_parser("transform", parents=[comunes], help="Traza hacia una χ'-coloración.")
    transformar.add_argument("--graph", required=True, type=Path)
    transformar.add_argument("--from", dest="desde", required=True, type=Path)
    transformar.add_argument("--target", required=True, type=Path)
    transformar.add_argument("--to", dest="hasta", type=Path, default=None, help="Segunda (χ'+1)-coloración.")
    transformar.add_argument("--out", type=Path, default=None)

    verificar = subcomandos.add_parser("verify-trace", parents=[comunes], help="Verifica una traza.")
    verificar.add_argument("--graph", required=True, type=Path)
    verificar.add_argument("--from", dest="desde", required=True, type=Path)
    verificar.add_argument("--trace", required=True, type=Path)
    verificar.add_argument("--expect", required=True, type=Path)
    verificar.add_argument("-k", type=int, default=None)

    explorar = subcomandos.add_parser("explore", parents=[comunes], help="Clases de reconfiguración con k colores.")
    explorar.add_argument("--graph", required=True, type=Path)
    explorar.add_argument("-k", type=int, required=True)
    explorar.add_argument("--max-edges", type=int, default=None, help="Guarda de tamaño del oráculo.")
    explorar.add_argument("--csv", type=Path, default=None)

    regularizar_cmd = subcomandos.add_parser("regularize", parents=[comunes], help="Supergrafo χ'-regular.")
    regularizar_cmd.add_argument("--graph", required=True, type=Path)
    regularizar_cmd.add_argument("--chi", type=int, default=None)
    regularizar_cmd.add_argument("--out", type=Path, default=None)
    regularizar_cmd.add_argument("--embedding", type=Path, default=None)
    return analizador


def ejecutar(argv: Sequence[str] | None = None) -> int:
    """Interpreta los argumentos, despacha el subcomando y devuelve el código de salida."""
    analizador = construir_analizador()
    try:
        argumentos = analizador.parse_args(argv)
    except _ErrorUso as error:
        print(f"error: {error}", file=sys.stderr)
        return SALIDA_USO
    except SystemExit as salida:
        return int(salida.code or 0)

    logging.basicConfig(
        level=logging.INFO if argumentos.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    manejador = _MANEJADORES[argumentos.comando]
    try:
        return manejador(argumentos)
    except ErrorPresupuestoAgotado as error:
        _reportar(error)
        return SALIDA_PRESUPUESTO
    except ErrorMotorKempe as error:
        _reportar(error)
        return SALIDA_USO
    except FileNotFoundError as error:
        print(f"error [ARCHIVO_NO_ENCONTRADO]: {error}", file=sys.stderr)
        return SALIDA_USO


def main() -> None:
    sys.exit(ejecutar())


def _reportar(error: ErrorMotorKempe) -> None:
    mensaje = error.como_mensaje()
    print(f"error [{mensaje['codigo']}]: {mensaje['detalle']}", file=sys.stderr)
    print(f"  {mensaje['explicacion_simple']}", file=sys.stderr)


def _presupuesto(argumentos: argparse.Namespace) -> PresupuestoBusqueda:
    base = obtener_configuracion().presupuesto()
    return PresupuestoBusqueda(
        max_estados=base.max_estados if argumentos.max_states is None else argumentos.max_states,
        max_profundidad=base.max_profundidad if argumentos.max_depth is None else argumentos.max_depth,
    )


def _semilla(argumentos: argparse.Namespace) -> int:
    return obtener_configuracion().semilla if argumentos.seed is None else argumentos.seed


def _escribir(texto: str, ruta: Path | None) -> None:
    if ruta is None:
        sys.stdout.write(texto)
        return
    ruta.parent.mkdir(parents=True, exist_ok=True)
    ruta.write_text(texto, encoding="utf-8")


def _cmd_color(argumentos: argparse.Namespace) -> int:
    grafo = cargar_grafo(argumentos.graph)
    coloracion = coloracion_optima(grafo) if argumentos.optimo else colorear_vizing(grafo)
    if argumentos.k is not None:
        if argumentos.k < coloracion.paleta:
            raise ErrorFormato(f"La paleta {argumentos.k} es menor que la usada ({coloracion.paleta})", codigo="PALETA_CORTA")
        coloracion = coloracion.con_paleta(argumentos.k)
    if argumentos.walk > 0:
        *_, coloracion = muestrear_coloraciones(coloracion, 1, _semilla(argumentos), argumentos.walk)
    _escribir(serializar_coloracion(coloracion), argumentos.out)
    return SALIDA_OK


def _cmd_indice(argumentos: argparse.Namespace) -> int:
    print(indice_cromatico(cargar_grafo(argumentos.graph)))
    return SALIDA_OK


def _cmd_abanico(argumentos: argparse.Namespace) -> int:
    grafo = cargar_grafo(argumentos.graph)
    coloracion = cargar_coloracion(argumentos.desde, grafo, argumentos.k)
    abanico = construir_abanico(coloracion, argumentos.center, (argumentos.center, argumentos.start))
    lineas = [
        f"centro {abanico.centro}",
        f"faltante_centro {abanico.faltante_centro}",
        f"forma {abanico.forma.value}",
    ]
    if abanico.indice_retorno is not None:
        lineas.append(f"indice_retorno {abanico.indice_retorno}")
    for (u, v), vertice, color, faltante in zip(
        abanico.secuencia, abanico.vertices, abanico.colores_aristas, abanico.faltantes
    ):
        lineas.append(f"arista {u}-{v} vertice {vertice} color {color} faltante {faltante}")
    if abanico.forma is FormaAbanico.CICLO:
        lineas.append(f"saturado {'si' if esta_saturado(coloracion, abanico) else 'no'}")
        lineas.append(f"ajustado {'si' if es_ajustado(coloracion, abanico) else 'no'}")
    print("\n".join(lineas))
    return SALIDA_OK


def _cmd_transformar(argumentos: argparse.Namespace) -> int:
    grafo = cargar_grafo(argumentos.graph)
    alfa = cargar_coloracion(argumentos.target, grafo)
    inicio = cargar_coloracion(argumentos.desde, grafo)
    presupuesto = _presupuesto(argumentos)
    if argumentos.hasta is None:
        traza = hacia_objetivo(inicio, alfa, presupuesto)
    else:
        traza = equivalencia(inicio, cargar_coloracion(argumentos.hasta, grafo), alfa, presupuesto)
    if argumentos.out is None:
        sys.stdout.write(serializar_traza(traza))
    else:
        guardar_traza(traza, argumentos.out)
    LOG.info("Traza de %s intercambios", len(traza))
    return SALIDA_OK


def _cmd_verificar(argumentos: argparse.Namespace) -> int:
    grafo = cargar_grafo(argumentos.graph)
    inicio = cargar_coloracion(argumentos.desde, grafo, argumentos.k)
    esperado = cargar_coloracion(argumentos.expect, grafo, argumentos.k)
    traza = cargar_traza(argumentos.trace)
    if argumentos.k is None:
        # Sin -k la paleta cubre también los colores que la traza usa de paso.
        paleta = max([inicio.paleta, esperado.paleta, *(color for registro in traza for color in registro.colores)])
        inicio = inicio.con_paleta(paleta)
        esperado = esperado.con_paleta(paleta)
    resultado = verificar_traza(grafo, inicio, traza, esperado)
    if resultado:
        print(f"ok: {resultado.detalle}")
        return SALIDA_OK
    print(f"discrepancia: {resultado.detalle}", file=sys.stderr)
    return SALIDA_VERIFICACION


def _cmd_explorar(argumentos: argparse.Namespace) -> int:
    grafo = cargar_grafo(argumentos.graph)
    limites = obtener_configuracion().limites()
    if argumentos.max_edges is not None:
        limites = LimitesOraculo(max_aristas=argumentos.max_edges)
    reconfiguracion = grafo_reconfiguracion(grafo, argumentos.k, limites)
    tabla = resumen_clases(reconfiguracion)
    print(f"coloraciones {len(reconfiguracion.coloraciones)}")
    print(f"clases {len(tabla)}")
    print(f"tamanos {' '.join(str(tamano) for tamano in tabla['tamano'])}")
    print(f"diametro {int(tabla['diametro'].max()) if len(tabla) else 0}")
    if argumentos.csv is not None:
        guardar_tabla(tabla, argumentos.csv)
    return SALIDA_OK


def _cmd_regularizar(argumentos: argparse.Namespace) -> int:
    grafo = cargar_grafo(argumentos.graph)
    chi = indice_cromatico(grafo) if argumentos.chi is None else argumentos.chi
    supergrafo, incrustacion = regularizar(grafo, chi)
    _escribir(serializar_grafo(supergrafo), argumentos.out)
    if argumentos.embedding is not None:
        _escribir(incrustacion.a_json(), argumentos.embedding)
    return SALIDA_OK


_MANEJADORES: dict[str, Callable[[argparse.Namespace], int]] = {
    "color": _cmd_color,
    "chromatic-index": _cmd_indice,
    "fan": _cmd_abanico,
    "transform": _cmd_transformar,
    "verify-trace": _cmd_verificar,
    "explore": _cmd_explorar,
    "regularize": _cmd_regularizar,
}


__all__ = [
    "SALIDA_OK",
    "SALIDA_USO",
    "SALIDA_PRESUPUESTO",
    "SALIDA_VERIFICACION",
    "Verificacion",
    "verificar_traza",
    "construir_analizador",
    "ejecutar",
    "main",
]
