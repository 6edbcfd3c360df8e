"""Inversión de abanicos.

Invertir un abanico X alrededor de v es llegar, por intercambios de Kempe, a la coloración en la
que cada arista v v_i toma el color m(v_i). Los caminos se invierten con intercambios de una sola
arista; los ciclos recorren una escalera de estrategias y cada peldaño se verifica contra el
objetivo antes de aceptarse.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from config.presupuestos import PresupuestoBusqueda, presupuesto_por_defecto

from .abanicos import Abanico, FormaAbanico, construir_abanico, es_ajustado, esta_saturado, verificar_regimen
from .errores import ErrorMotorKempe, ErrorPresupuestoAgotado, ErrorRegimen
from .kempe import RegistroIntercambio, Traza, componente, intercambiar_desde, reproducir
from .nucleo import Coloracion, otro_extremo
from .oraculo import buscar

LOG = logging.getLogger(__name__)


class Estrategia(str, Enum):
    """Peldaño de la escalera que resolvió la inversión de un ciclo."""

    TAMANO_DOS = "tamano_dos"
    ESCAPE_NO_SATURADO = "escape_no_saturado"
    REDUCCION_AJUSTE = "reduccion_ajuste"
    BUSQUEDA = "busqueda"


@dataclass(frozen=True)
class ResultadoInversion:
    """Coloración final, traza que la produce y estrategia usada (None para caminos)."""

    final: Coloracion
    traza: Traza
    estrategia: Estrategia | None = None


def objetivo_inversion(coloracion: Coloracion, abanico: Abanico) -> Coloracion:
    """X⁻¹(β): cada arista v v_i del ciclo pasa a m(v_i); el resto no cambia."""
    _exigir_forma(abanico, FormaAbanico.CICLO, "objetivo_inversion")
    verificar_regimen(coloracion)
    cambios = {
        arista: coloracion.faltante(otro_extremo(arista, abanico.centro)) for arista in abanico.secuencia
    }
    return coloracion.con_cambios(cambios)


def invertir_camino(coloracion: Coloracion, abanico: Abanico, hasta: int | None = None) -> ResultadoInversion:
    """Invierte un camino con intercambios triviales desde la última arista hacia atrás.

    Parámetros
    ----------
    coloracion : Coloracion
        Coloración bajo la que se construyó el abanico.
    abanico : Abanico
        Abanico con forma de camino.
    hasta : int | None
        Vértice v_j del abanico: se intercambian v v_k, ..., v v_j (inclusive). Con None se
        invierte completo y m(v) termina siendo β(v v_1).

    Retorna
    -------
    ResultadoInversion
        Coloración final y un registro por cada intercambio de una arista.
    """
    _exigir_forma(abanico, FormaAbanico.CAMINO, "invertir_camino")
    vertices = abanico.vertices
    if hasta is None:
        tope = 0
    elif hasta in vertices:
        tope = vertices.index(hasta)
    else:
        raise ErrorRegimen(f"El vértice {hasta} no pertenece al abanico centrado en {abanico.centro}")

    actual = coloracion
    registros: list[RegistroIntercambio] = []
    for arista in reversed(abanico.secuencia[tope:]):
        cadena = componente(actual, arista, actual.faltante(abanico.centro), actual.color(arista))
        if len(cadena.aristas) != 1:
            raise ErrorRegimen(f"La arista {arista} no forma una cadena trivial; el abanico no corresponde a la coloración")
        actual, registro = intercambiar_desde(actual, arista, *cadena.colores)
        registros.append(registro)
    return ResultadoInversion(final=actual, traza=tuple(registros))


def invertir_ciclo(
    coloracion: Coloracion,
    abanico: Abanico,
    presupuesto: PresupuestoBusqueda | None = None,
    congelados: Iterable[int] = (),
) -> ResultadoInversion:
    """Invierte un ciclo probando, en orden, tamaño dos, escape no saturado, reducción por ajuste y búsqueda.

    La búsqueda final no usa pares de colores que toquen `congelados`.

    Raises:
        ErrorRegimen: Si el abanico no es un ciclo o la coloración sale del régimen.
        ErrorPresupuestoAgotado: Si ningún peldaño llega al objetivo dentro del presupuesto.
    """
    presupuesto = presupuesto or presupuesto_por_defecto()
    fijos = tuple(congelados)
    objetivo = objetivo_inversion(coloracion, abanico)

    peldanos = (
        (Estrategia.TAMANO_DOS, _tamano_dos),
        (Estrategia.ESCAPE_NO_SATURADO, _escape_no_saturado),
        (Estrategia.REDUCCION_AJUSTE, _reduccion_ajuste),
    )
    for estrategia, peldano in peldanos:
        try:
            traza = peldano(coloracion, abanico, presupuesto, fijos)
        except ErrorMotorKempe as error:
            LOG.debug("Peldaño %s descartado en %s: %s", estrategia.value, abanico.centro, error.detalle)
            continue
        if traza is None:
            continue
        final = reproducir(coloracion, traza)
        if final == objetivo:
            LOG.debug("Ciclo de tamaño %s en %s invertido con %s", len(abanico), abanico.centro, estrategia.value)
            return ResultadoInversion(final=final, traza=traza, estrategia=estrategia)
        LOG.debug("Peldaño %s no alcanzó el objetivo en %s", estrategia.value, abanico.centro)

    LOG.debug("Ciclo de tamaño %s en %s pasa a búsqueda acotada", len(abanico), abanico.centro)
    try:
        final, traza = buscar(coloracion, lambda candidata: candidata == objetivo, presupuesto, fijos)
    except ErrorPresupuestoAgotado as error:
        raise ErrorPresupuestoAgotado(
            f"No se pudo invertir el ciclo de tamaño {len(abanico)} en {abanico.centro}: {error.detalle}"
        ) from error
    return ResultadoInversion(final=final, traza=traza, estrategia=Estrategia.BUSQUEDA)


def _tamano_dos(
    coloracion: Coloracion,
    abanico: Abanico,
    presupuesto: PresupuestoBusqueda,
    congelados: tuple[int, ...],
) -> Traza | None:
    if len(abanico) != 2:
        return None
    primera, segunda = abanico.secuencia
    _, registro = intercambiar_desde(coloracion, primera, coloracion.color(primera), coloracion.color(segunda))
    return (registro,)


def _escape_no_saturado(
    coloracion: Coloracion,
    abanico: Abanico,
    presupuesto: PresupuestoBusqueda,
    congelados: tuple[int, ...],
) -> Traza | None:
    """Intercambia K_{v_i}(m(v), m(v_i)) para un v_i fuera de ella, invierte el camino resultante y deshace el intercambio."""
    if esta_saturado(coloracion, abanico):
        return None
    centro = abanico.centro
    faltante_centro = coloracion.faltante(centro)
    vertices = abanico.vertices
    for indice, vertice in enumerate(vertices):
        faltante_vertice = coloracion.faltante(vertice)
        escape = componente(coloracion, vertice, faltante_centro, faltante_vertice)
        if escape.contiene(centro):
            continue
        actual, primer_registro = intercambiar_desde(coloracion, vertice, faltante_centro, faltante_vertice)
        inicio = abanico.secuencia[(indice + 1) % len(abanico)]
        camino = construir_abanico(actual, centro, inicio)
        if camino.forma is not FormaAbanico.CAMINO or camino.ultimo != vertice:
            continue
        inversion = invertir_camino(actual, camino)
        arista_retorno = abanico.secuencia[indice]
        _, ultimo_registro = intercambiar_desde(inversion.final, arista_retorno, faltante_centro, faltante_vertice)
        return (primer_registro, *inversion.traza, ultimo_registro)
    return None


def _reduccion_ajuste(
    coloracion: Coloracion,
    abanico: Abanico,
    presupuesto: PresupuestoBusqueda,
    congelados: tuple[int, ...],
) -> Traza | None:
    """Para v_i fuera de C = K_{v_{i-1}}(m(v_{i-1}), m(v_i)): intercambia C, invierte el ciclo sin v v_i y deshace C."""
    if len(abanico) < 3 or es_ajustado(coloracion, abanico):
        return None
    centro = abanico.centro
    vertices = abanico.vertices
    for indice, vertice in enumerate(vertices):
        previo = indice - 1 if indice > 0 else len(vertices) - 1
        color_previo = coloracion.faltante(vertices[previo])
        color_vertice = coloracion.faltante(vertice)
        bloqueo = componente(coloracion, vertices[previo], color_previo, color_vertice)
        if bloqueo.contiene(vertice) or bloqueo.contiene(centro):
            continue
        actual, primer_registro = intercambiar_desde(coloracion, vertices[previo], color_previo, color_vertice)
        arista_previa = abanico.secuencia[previo]
        menor = construir_abanico(actual, centro, arista_previa)
        if menor.forma is not FormaAbanico.CICLO or len(menor) != len(abanico) - 1:
            continue
        interno = invertir_ciclo(actual, menor, presupuesto, congelados)
        _, ultimo_registro = intercambiar_desde(interno.final, arista_previa, color_previo, color_vertice)
        return (primer_registro, *interno.traza, ultimo_registro)
    return None


def _exigir_forma(abanico: Abanico, forma: FormaAbanico, operacion: str) -> None:
    if abanico.forma is not forma:
        raise ErrorRegimen(f"{operacion} requiere un abanico {forma.value}; llegó {abanico.forma.value}")


__all__ = [
    "Estrategia",
    "ResultadoInversion",
    "objetivo_inversion",
    "invertir_camino",
    "invertir_ciclo",
]
