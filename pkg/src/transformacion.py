"""Conductor de la transformación hacia una χ'-coloración objetivo.

Para cada color c de la coloración objetivo α, en orden ascendente, se alinea la clase
M = α⁻¹(c): se buscan pasos que reduzcan lexicográficamente (aristas malas, aristas feas) hasta
que las aristas de color c sean exactamente M. Los colores ya alineados quedan congelados y
ningún intercambio posterior los toca.

Cada macro-paso se verifica después de ejecutarlo; si no mejora la medida se descarta y se
intenta el siguiente recurso (al final, una búsqueda en anchura acotada).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Collection, Iterable

from config.presupuestos import PresupuestoBusqueda, presupuesto_por_defecto

from .abanicos import Abanico, FormaAbanico, construir_abanico
from .errores import ErrorCadenaObsoleta, ErrorFormato, ErrorMotorKempe, ErrorPresupuestoAgotado
from .inversion import invertir_ciclo
from .kempe import (
    Ancla,
    FormaCadena,
    RegistroIntercambio,
    Traza,
    componente,
    intercambiar_desde,
    invertir_traza,
    reproducir,
    secuencia_vertices,
    vecinos_kempe,
)
from .nucleo import Arista, ClaseArista, Coloracion, conteo_clases, es_propia, normalizar_arista, otro_extremo
from .oraculo import buscar
from .regularizacion import elevar_coloracion, proyectar_traza, regularizar

LOG = logging.getLogger(__name__)

Medida = tuple[int, int]


@dataclass
class DiagnosticoAlineacion:
    """Contadores de cómo se resolvió la alineación de una clase."""

    intercambios_simples: int = 0
    macro_pasos: int = 0
    pasos_respaldo: int = 0
    estados_minimos: int = 0
    violaciones_lemas: int = 0

    def sumar(self, otro: "DiagnosticoAlineacion") -> None:
        self.intercambios_simples += otro.intercambios_simples
        self.macro_pasos += otro.macro_pasos
        self.pasos_respaldo += otro.pasos_respaldo
        self.estados_minimos += otro.estados_minimos
        self.violaciones_lemas += otro.violaciones_lemas

    @property
    def pasos_totales(self) -> int:
        return self.intercambios_simples + self.macro_pasos + self.pasos_respaldo


@dataclass(frozen=True)
class EstadoAlineacion:
    """Resultado de alinear una clase: coloración, emparejamiento, conteos y traza acumulada."""

    coloracion: Coloracion
    emparejamiento: frozenset[Arista]
    color_objetivo: int
    malas: int
    feas: int
    traza: Traza
    diagnostico: DiagnosticoAlineacion = field(default_factory=DiagnosticoAlineacion, compare=False)

    @property
    def medida(self) -> Medida:
        return (self.malas, self.feas)

    @property
    def alineado(self) -> bool:
        return self.malas == 0 and self.feas == 0


@dataclass(frozen=True)
class ResultadoTransformacion:
    """Traza completa hacia α y los estados de cada clase alineada (en el grafo donde se alineó)."""

    traza: Traza
    estados: tuple[EstadoAlineacion, ...]
    regularizado: bool

    def diagnostico(self) -> DiagnosticoAlineacion:
        total = DiagnosticoAlineacion()
        for estado in self.estados:
            total.sumar(estado.diagnostico)
        return total


class _MacroInviable(Exception):
    """La configuración no encaja con el macro-paso en curso."""


def medir(coloracion: Coloracion, emparejamiento: Collection[Arista], color_objetivo: int) -> Medida:
    """(aristas malas, aristas feas) respecto de (M, color_objetivo)."""
    conteo = conteo_clases(coloracion, emparejamiento, color_objetivo)
    return conteo[ClaseArista.MALA], conteo[ClaseArista.FEA]


def alinear_clase(
    coloracion: Coloracion,
    emparejamiento: Iterable[tuple[int, int]],
    color_objetivo: int,
    presupuesto: PresupuestoBusqueda | None = None,
    congelados: Iterable[int] = (),
) -> EstadoAlineacion:
    """Lleva la coloración a una en la que las aristas de `color_objetivo` son exactamente M.

    Args:
        coloracion: (χ'+1)-coloración propia de un grafo χ'-regular.
        emparejamiento: Clase M de la coloración objetivo.
        color_objetivo: Color que deben recibir las aristas de M.
        presupuesto: Límites de las búsquedas de respaldo e inversión.
        congelados: Colores de clases ya alineadas; ningún intercambio los usa.

    Returns:
        Estado final con cero aristas malas y cero feas, y la traza que lo produce.

    Raises:
        ErrorFormato: Si M no es un emparejamiento del grafo.
        ErrorPresupuestoAgotado: Si ningún recurso logra mejorar la medida dentro del presupuesto.
    """
    presupuesto = presupuesto or presupuesto_por_defecto()
    fijos = frozenset(congelados)
    conjunto = _validar_emparejamiento(coloracion, emparejamiento)
    diagnostico = DiagnosticoAlineacion()
    actual = coloracion
    medida = medir(actual, conjunto, color_objetivo)
    registros: list[RegistroIntercambio] = []
    LOG.info("Alineando la clase %s: %s malas, %s feas", color_objetivo, *medida)

    if medida != (0, 0) and presupuesto.es_nulo:
        raise ErrorPresupuestoAgotado(f"Presupuesto nulo y la clase {color_objetivo} no está alineada")

    conductor = _Conductor(conjunto, color_objetivo, presupuesto, fijos, diagnostico)
    while medida != (0, 0):
        paso = conductor.siguiente_paso(actual, medida)
        actual = reproducir(actual, paso)
        nueva = medir(actual, conjunto, color_objetivo)
        LOG.debug("Clase %s: %s → %s con %s intercambios", color_objetivo, medida, nueva, len(paso))
        medida = nueva
        registros.extend(paso)

    LOG.info(
        "Clase %s alineada con %s intercambios (%s macro-pasos, %s respaldos)",
        color_objetivo,
        len(registros),
        diagnostico.macro_pasos,
        diagnostico.pasos_respaldo,
    )
    return EstadoAlineacion(
        coloracion=actual,
        emparejamiento=conjunto,
        color_objetivo=color_objetivo,
        malas=0,
        feas=0,
        traza=tuple(registros),
        diagnostico=diagnostico,
    )


@dataclass
class _Conductor:
    """Elige el siguiente paso verificado de la alineación de una clase."""

    emparejamiento: frozenset[Arista]
    color_objetivo: int
    presupuesto: PresupuestoBusqueda
    congelados: frozenset[int]
    diagnostico: DiagnosticoAlineacion

    def siguiente_paso(self, coloracion: Coloracion, medida: Medida) -> Traza:
        paso = self._intercambio_simple(coloracion)
        if paso is not None:
            self.diagnostico.intercambios_simples += 1
            return paso

        candidatos = self._candidatos(coloracion)
        if candidatos:
            self._comprobar_lemas(coloracion, candidatos[0][2], medida)
        for mala, libre, fea in candidatos:
            try:
                paso = self._macro_paso(coloracion, mala, libre, fea)
            except (_MacroInviable, ErrorMotorKempe) as error:
                LOG.debug("Macro-paso descartado en %s: %s", mala, error)
                continue
            if self._acepta(coloracion, paso, medida):
                self.diagnostico.macro_pasos += 1
                return paso
            LOG.debug("Macro-paso en %s no redujo %s", mala, medida)

        LOG.warning("Clase %s: búsqueda de respaldo desde %s", self.color_objetivo, medida)
        self.diagnostico.pasos_respaldo += 1
        _, paso = buscar(
            coloracion,
            lambda candidata: medir(candidata, self.emparejamiento, self.color_objetivo) < medida,
            self.presupuesto,
            self.congelados,
        )
        return paso

    def _intercambio_simple(self, coloracion: Coloracion) -> Traza | None:
        """Una arista mala con ambos extremos libres se corrige con un intercambio de una arista."""
        objetivo = self.color_objetivo
        for arista in sorted(self.emparejamiento):
            color = coloracion.color(arista)
            if color == objetivo or color in self.congelados:
                continue
            u, v = arista
            if objetivo in coloracion.faltantes(u) and objetivo in coloracion.faltantes(v):
                _, registro = intercambiar_desde(coloracion, arista, objetivo, color)
                return (registro,)
        return None

    def _candidatos(self, coloracion: Coloracion) -> list[tuple[Arista, int, Arista]]:
        """Ternas (arista mala uv, extremo libre u, arista fea vw)."""
        objetivo = self.color_objetivo
        candidatos: list[tuple[Arista, int, Arista]] = []
        for arista in sorted(self.emparejamiento):
            if coloracion.color(arista) == objetivo:
                continue
            for u in arista:
                v = otro_extremo(arista, u)
                if objetivo not in coloracion.faltantes(u):
                    continue
                fea = coloracion.arista_de_color(v, objetivo)
                if fea is not None and fea not in self.emparejamiento:
                    candidatos.append((arista, u, fea))
        return candidatos

    def _macro_paso(self, coloracion: Coloracion, mala: Arista, u: int, fea: Arista) -> Traza:
        """Secuencia del argumento principal para la arista mala uv y la arista fea vw."""
        v = otro_extremo(mala, u)
        w = otro_extremo(fea, v)
        ejecucion = _Ejecucion(coloracion, self.presupuesto, self.congelados)

        abanico_v = ejecucion.abanico_ciclo(v, fea)
        if u in abanico_v.vertices:
            ejecucion.invertir(v, fea)
            return ejecucion.traza()

        c = coloracion.color(mala)
        c_prima = coloracion.faltante(w)
        if c_prima == c:
            raise _MacroInviable(f"{w} ya no tiene arista de color {c}")
        cadena = componente(coloracion, w, c, c_prima)
        if not cadena.contiene(v):
            ejecucion.intercambiar(w, c, c_prima)
            ejecucion.invertir(v, fea)
            return ejecucion.traza()

        orden = secuencia_vertices(cadena, w)
        if u in orden and orden.index(u) < orden.index(v):
            # u entre w y v
            ejecucion.invertir(v, fea)
            ejecucion.intercambiar_ciclo(w, c, c_prima)
            ejecucion.invertir(v, mala)
            return ejecucion.traza()

        abanico_w = ejecucion.abanico_ciclo(w, fea)
        if u not in abanico_w.vertices:
            ejecucion.invertir(w, fea)
            ejecucion.intercambiar(mala, self.color_objetivo, ejecucion.actual.color(mala))
            return ejecucion.traza()
        ejecucion.invertir(w, fea)
        ejecucion.invertir(u, normalizar_arista(u, w))
        ejecucion.intercambiar_ciclo(w, c, c_prima)
        ejecucion.invertir(u, mala)
        return ejecucion.traza()

    def _acepta(self, coloracion: Coloracion, paso: Traza, medida: Medida) -> bool:
        if not paso or any(color in self.congelados for registro in paso for color in registro.colores):
            return False
        final = reproducir(coloracion, paso)
        return medir(final, self.emparejamiento, self.color_objetivo) < medida

    def _comprobar_lemas(self, coloracion: Coloracion, fea: Arista, medida: Medida) -> None:
        """En un estado localmente mínimo, los abanicos de una arista fea son ciclos y sus extremos ven un vértice libre."""
        if not coloracion.un_solo_faltante or not self._localmente_minimo(coloracion, medida):
            return
        self.diagnostico.estados_minimos += 1
        objetivo = self.color_objetivo
        violaciones: list[str] = []
        for centro in fea:
            if construir_abanico(coloracion, centro, fea).forma is not FormaAbanico.CICLO:
                violaciones.append(f"X_{centro}({fea}) no es ciclo")
            if not any(objetivo in coloracion.faltantes(x) for x in coloracion.grafo.vecinos(centro)):
                violaciones.append(f"{centro} no es adyacente a un vértice libre")
        if violaciones:
            self.diagnostico.violaciones_lemas += len(violaciones)
            LOG.warning("Estado mínimo con arista fea %s: %s", fea, "; ".join(violaciones))

    def _localmente_minimo(self, coloracion: Coloracion, medida: Medida) -> bool:
        for _, vecino in vecinos_kempe(coloracion, self.congelados):
            if medir(vecino, self.emparejamiento, self.color_objetivo) < medida:
                return False
        return True


class _Ejecucion:
    """Aplica intercambios e inversiones sobre una coloración de trabajo y acumula sus registros."""

    def __init__(self, coloracion: Coloracion, presupuesto: PresupuestoBusqueda, congelados: frozenset[int]) -> None:
        self.actual = coloracion
        self.presupuesto = presupuesto
        self.congelados = congelados
        self._registros: list[RegistroIntercambio] = []

    def traza(self) -> Traza:
        return tuple(self._registros)

    def abanico_ciclo(self, centro: int, arista: Arista) -> Abanico:
        abanico = construir_abanico(self.actual, centro, arista)
        if abanico.forma is not FormaAbanico.CICLO:
            raise _MacroInviable(f"X_{centro}({arista}) es {abanico.forma.value}")
        return abanico

    def invertir(self, centro: int, arista: Arista) -> None:
        resultado = invertir_ciclo(self.actual, self.abanico_ciclo(centro, arista), self.presupuesto, self.congelados)
        self.actual = resultado.final
        self._registros.extend(resultado.traza)

    def intercambiar(self, ancla: Ancla, a: int, b: int) -> None:
        self.actual, registro = intercambiar_desde(self.actual, ancla, a, b)
        self._registros.append(registro)

    def intercambiar_ciclo(self, ancla: Ancla, a: int, b: int) -> None:
        cadena = componente(self.actual, ancla, a, b)
        if cadena.forma is not FormaCadena.CICLO_PAR:
            raise _MacroInviable(f"K_{ancla}({a},{b}) no es un ciclo")
        self.intercambiar(ancla, a, b)


def transformar(
    coloracion: Coloracion,
    alfa: Coloracion,
    presupuesto: PresupuestoBusqueda | None = None,
) -> ResultadoTransformacion:
    """Igual que `hacia_objetivo`, pero también entrega los estados y diagnósticos de cada clase."""
    grafo = alfa.grafo
    if coloracion.grafo != grafo:
        raise ErrorFormato("Las dos coloraciones deben ser del mismo grafo", codigo="GRAFO_DISTINTO")
    if not es_propia(grafo, alfa) or not es_propia(grafo, coloracion):
        raise ErrorFormato("Las coloraciones deben ser propias", codigo="COLORACION_IMPROPIA")
    chi = alfa.paleta
    if coloracion.colores and max(coloracion.colores) > chi + 1:
        raise ErrorFormato(
            f"La coloración de partida usa más de {chi + 1} colores", codigo="PALETA_EXCEDIDA"
        )
    inicio = coloracion.con_paleta(chi + 1)

    if not grafo.aristas or grafo.es_regular(chi):
        traza, estados = _alinear_todo(inicio, alfa, presupuesto)
        return ResultadoTransformacion(traza=traza, estados=estados, regularizado=False)

    supergrafo, incrustacion = regularizar(grafo, chi)
    inicio_super = elevar_coloracion(inicio, incrustacion)
    alfa_super = elevar_coloracion(alfa, incrustacion)
    LOG.info("Alineando en el supergrafo regular de %s vértices", supergrafo.num_vertices)
    traza_super, estados = _alinear_todo(inicio_super, alfa_super, presupuesto)
    traza = proyectar_traza(traza_super, incrustacion, inicio)
    if reproducir(inicio, traza).colores != alfa.colores:
        raise ErrorCadenaObsoleta("La traza proyectada no llega a la coloración objetivo")
    return ResultadoTransformacion(traza=traza, estados=estados, regularizado=True)


def hacia_objetivo(
    coloracion: Coloracion,
    alfa: Coloracion,
    presupuesto: PresupuestoBusqueda | None = None,
) -> Traza:
    """Traza que lleva una (χ'+1)-coloración a la χ'-coloración `alfa` (el color χ'+1 queda sin usar)."""
    return transformar(coloracion, alfa, presupuesto).traza


def equivalencia(
    primera: Coloracion,
    segunda: Coloracion,
    alfa: Coloracion,
    presupuesto: PresupuestoBusqueda | None = None,
) -> Traza:
    """Traza de `primera` a `segunda` pasando por `alfa` como intermedia."""
    ida = hacia_objetivo(primera, alfa, presupuesto)
    vuelta = hacia_objetivo(segunda, alfa, presupuesto)
    traza = ida + invertir_traza(vuelta)
    inicio = primera.con_paleta(alfa.paleta + 1)
    if reproducir(inicio, traza).colores != segunda.colores:
        raise ErrorCadenaObsoleta("La traza compuesta no llega a la segunda coloración")
    return traza


def _alinear_todo(
    inicio: Coloracion,
    alfa: Coloracion,
    presupuesto: PresupuestoBusqueda | None,
) -> tuple[Traza, tuple[EstadoAlineacion, ...]]:
    actual = inicio
    registros: list[RegistroIntercambio] = []
    estados: list[EstadoAlineacion] = []
    alineados: list[int] = []
    for color in range(1, alfa.paleta + 1):
        clase = [arista for arista, tono in alfa.asignacion.items() if tono == color]
        estado = alinear_clase(actual, clase, color, presupuesto, alineados)
        actual = estado.coloracion
        registros.extend(estado.traza)
        estados.append(estado)
        alineados.append(color)
    return tuple(registros), tuple(estados)


def _validar_emparejamiento(coloracion: Coloracion, emparejamiento: Iterable[tuple[int, int]]) -> frozenset[Arista]:
    conjunto = frozenset(normalizar_arista(*arista) for arista in emparejamiento)
    ajenas = sorted(arista for arista in conjunto if arista not in coloracion.grafo.aristas)
    if ajenas:
        raise ErrorFormato(f"Las aristas {ajenas} del emparejamiento no están en el grafo", codigo="ARISTA_DESCONOCIDA")
    extremos = [v for arista in conjunto for v in arista]
    if len(extremos) != len(set(extremos)):
        raise ErrorFormato("Las aristas objetivo no forman un emparejamiento", codigo="NO_ES_EMPAREJAMIENTO")
    return conjunto


__all__ = [
    "DiagnosticoAlineacion",
    "EstadoAlineacion",
    "ResultadoTransformacion",
    "medir",
    "alinear_clase",
    "transformar",
    "hacia_objetivo",
    "equivalencia",
]
