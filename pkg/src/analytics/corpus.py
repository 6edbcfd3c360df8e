"""Barridos del corpus de escritorio y tablas de resultados.

Cada barrido devuelve un DataFrame (tabla de pandas) con una fila por caso evaluado, listo para
guardarse como CSV o resumirse con `calcular_fracciones`.
"""

from __future__ import annotations

import logging
import random
from itertools import islice
from pathlib import Path
from typing import Dict, Iterable, Iterator, List

import networkx as nx
import pandas as pd
from pandas import DataFrame

from config.presupuestos import LimitesOraculo, PresupuestoBusqueda

from ..abanicos import FormaAbanico, abanicos_de, forma_abanico
from ..errores import ErrorPresupuestoAgotado
from ..inversion import Estrategia, invertir_ciclo, objetivo_inversion
from ..kempe import pasos_reproduccion, reproducir
from ..modelos import ResumenClaseModelo
from ..nucleo import Coloracion, Grafo, es_propia
from ..oraculo import GrafoReconfiguracion, enumerar_coloraciones, grafo_reconfiguracion, indice_cromatico
from ..regularizacion import regularizar
from ..transformacion import transformar

LOG = logging.getLogger(__name__)

Corpus = Iterable[tuple[str, Grafo]]


def resumen_clases(reconfiguracion: GrafoReconfiguracion) -> DataFrame:
    """Tabla con tamaño, diámetro y representante de cada clase de reconfiguración."""
    filas: List[Dict[str, object]] = []
    for posicion, clase in enumerate(reconfiguracion.clases()):
        representante = reconfiguracion.coloraciones[clase[0]]
        fila = ResumenClaseModelo(
            clase=posicion,
            tamano=len(clase),
            diametro=reconfiguracion.diametro(clase),
            representante=" ".join(str(color) for color in representante.colores),
        )
        filas.append(fila.model_dump())
    return pd.DataFrame(filas, columns=list(ResumenClaseModelo.model_fields))


def barrer_teorema(corpus: Corpus, limites: LimitesOraculo | None = None) -> DataFrame:
    """Cuenta las clases de Kempe con χ'+1 y χ'+2 colores para cada grafo del corpus."""
    filas: List[Dict[str, object]] = []
    for nombre, grafo in corpus:
        chi = indice_cromatico(grafo)
        for extra in (1, 2):
            reconfiguracion = grafo_reconfiguracion(grafo, chi + extra, limites)
            clases = reconfiguracion.clases()
            filas.append(
                {
                    "grafo": nombre,
                    "vertices": grafo.num_vertices,
                    "aristas": len(grafo.aristas),
                    "delta": grafo.grado_maximo,
                    "chi": chi,
                    "paleta": chi + extra,
                    "coloraciones": len(reconfiguracion.coloraciones),
                    "clases": len(clases),
                    "diametro_max": max((reconfiguracion.diametro(clase) for clase in clases), default=0),
                }
            )
        LOG.debug("Barrido del teorema: %s listo", nombre)
    return pd.DataFrame(filas)


def barrer_abanicos(corpus: Corpus, limites: LimitesOraculo | None = None) -> DataFrame:
    """Clasifica todos los abanicos de todas las (χ'+1)-coloraciones de grafos χ'-regulares."""
    filas: List[Dict[str, object]] = []
    for nombre, grafo in corpus:
        chi = grafo.grado_maximo
        for posicion, coloracion in enumerate(enumerar_coloraciones(grafo, chi + 1, limites)):
            for v in range(grafo.num_vertices):
                for abanico in abanicos_de(coloracion, v):
                    filas.append(
                        {
                            "grafo": nombre,
                            "coloracion": posicion,
                            "centro": v,
                            "inicio": f"{abanico.secuencia[0][0]}-{abanico.secuencia[0][1]}",
                            "tamano": len(abanico),
                            "forma": abanico.forma.value,
                            "forma_recalculada": forma_abanico(abanico).value,
                        }
                    )
    return pd.DataFrame(filas, columns=["grafo", "coloracion", "centro", "inicio", "tamano", "forma", "forma_recalculada"])


def barrer_inversion(
    corpus: Corpus,
    presupuesto: PresupuestoBusqueda | None = None,
    limites: LimitesOraculo | None = None,
) -> DataFrame:
    """Invierte cada abanico ciclo del corpus regular y registra la estrategia usada."""
    filas: List[Dict[str, object]] = []
    for nombre, grafo in corpus:
        chi = grafo.grado_maximo
        for posicion, coloracion in enumerate(enumerar_coloraciones(grafo, chi + 1, limites)):
            for v in range(grafo.num_vertices):
                for abanico in abanicos_de(coloracion, v):
                    if abanico.forma is not FormaAbanico.CICLO:
                        continue
                    fila: Dict[str, object] = {
                        "grafo": nombre,
                        "coloracion": posicion,
                        "centro": v,
                        "tamano": len(abanico),
                    }
                    try:
                        resultado = invertir_ciclo(coloracion, abanico, presupuesto)
                    except ErrorPresupuestoAgotado:
                        fila.update({"estrategia": "agotado", "longitud_traza": -1, "correcto": False})
                    else:
                        correcto = resultado.final == objetivo_inversion(coloracion, abanico) and (
                            reproducir(coloracion, resultado.traza) == resultado.final
                        )
                        fila.update(
                            {
                                "estrategia": resultado.estrategia.value if resultado.estrategia else "",
                                "longitud_traza": len(resultado.traza),
                                "correcto": correcto,
                            }
                        )
                    filas.append(fila)
    return pd.DataFrame(
        filas, columns=["grafo", "coloracion", "centro", "tamano", "estrategia", "longitud_traza", "correcto"]
    )


def barrer_transformacion(
    corpus: Corpus,
    presupuesto: PresupuestoBusqueda | None = None,
    limites: LimitesOraculo | None = None,
    max_casos_por_grafo: int | None = None,
) -> DataFrame:
    """Lleva cada (χ'+1)-coloración a cada χ'-coloración y verifica la traza paso a paso."""
    filas: List[Dict[str, object]] = []
    for nombre, grafo in corpus:
        chi = indice_cromatico(grafo)
        objetivos = enumerar_coloraciones(grafo, chi, limites)
        origenes = enumerar_coloraciones(grafo, chi + 1, limites)
        casos = ((o, origen, a, alfa) for o, origen in enumerate(origenes) for a, alfa in enumerate(objetivos))
        for o, origen, a, alfa in islice(casos, max_casos_por_grafo):
            fila: Dict[str, object] = {"grafo": nombre, "origen": o, "objetivo": a}
            try:
                resultado = transformar(origen, alfa, presupuesto)
            except ErrorPresupuestoAgotado:
                fila.update({"longitud_traza": -1, "regularizado": False, "correcto": False})
                filas.append(fila)
                continue
            final = origen
            correcto = True
            for final in pasos_reproduccion(origen, resultado.traza):
                correcto = correcto and es_propia(grafo, final)
            diagnostico = resultado.diagnostico()
            fila.update(
                {
                    "longitud_traza": len(resultado.traza),
                    "regularizado": resultado.regularizado,
                    "macro_pasos": diagnostico.macro_pasos,
                    "intercambios_simples": diagnostico.intercambios_simples,
                    "pasos_respaldo": diagnostico.pasos_respaldo,
                    "violaciones_lemas": diagnostico.violaciones_lemas,
                    "correcto": correcto and final.colores == alfa.colores,
                }
            )
            filas.append(fila)
        LOG.info("Barrido de transformación: %s listo", nombre)
    return pd.DataFrame(filas)


def calcular_fracciones(inversiones: DataFrame) -> Dict[str, float]:
    """Resume un barrido de inversión: total, fracción por estrategia y fracción sin búsqueda.

    Args:
        inversiones: DataFrame producido por `barrer_inversion`.

    Returns:
        dict: Fracciones en [0, 1]; NaN si no hubo ciclos.
    """
    total = int(len(inversiones))
    resultados: Dict[str, float] = {"total_ciclos": float(total)}
    nombres = [estrategia.value for estrategia in Estrategia]
    if total == 0:
        resultados.update({f"fraccion_{nombre}": float("nan") for nombre in nombres})
        resultados["fraccion_sin_busqueda"] = float("nan")
        resultados["fraccion_correcta"] = float("nan")
        return resultados

    conteos = inversiones["estrategia"].value_counts()
    for nombre in nombres:
        resultados[f"fraccion_{nombre}"] = float(conteos.get(nombre, 0)) / total
    resueltos = inversiones["estrategia"].isin(nombres[:-1])
    resultados["fraccion_sin_busqueda"] = float(resueltos.sum()) / total
    resultados["fraccion_correcta"] = float(inversiones["correcto"].astype(bool).sum()) / total
    return resultados


def barrer_paridad(nombre: str, coloraciones: Iterable[Coloracion]) -> DataFrame:
    """Cuenta, por coloración y color, los vértices a los que les falta ese color.

    En un clique de orden par coloreado con Δ+1 colores cada conteo es par.
    """
    filas: List[Dict[str, object]] = []
    for posicion, coloracion in enumerate(coloraciones):
        conteos = [
            sum(1 for v in range(coloracion.grafo.num_vertices) if color in coloracion.faltantes(v))
            for color in range(1, coloracion.paleta + 1)
        ]
        filas.append(
            {
                "grafo": nombre,
                "coloracion": posicion,
                "conteos": " ".join(str(conteo) for conteo in conteos),
                "pares": all(conteo % 2 == 0 for conteo in conteos),
            }
        )
    LOG.debug("Barrido de paridad: %s con %s coloraciones", nombre, len(filas))
    return pd.DataFrame(filas, columns=["grafo", "coloracion", "conteos", "pares"])


def grafos_regularizados_aleatorios(
    cantidad: int,
    semilla: int = 0,
    max_aristas: int = 10,
    max_vertices_base: int = 5,
) -> Iterator[tuple[str, Grafo]]:
    """Supergrafos χ'-regulares de grafos aleatorios conexos, con a lo sumo `max_aristas` aristas."""
    generador = random.Random(semilla)
    entregados = 0
    intentos = 0
    while entregados < cantidad and intentos < 1000 * max(cantidad, 1):
        intentos += 1
        n = generador.randint(2, max_vertices_base)
        m = generador.randint(n - 1, min(n * (n - 1) // 2, max_aristas))
        grafo_nx = nx.gnm_random_graph(n, m, seed=generador.randrange(2**32))
        if not nx.is_connected(grafo_nx):
            continue
        base = Grafo.desde_networkx(grafo_nx)
        supergrafo, _ = regularizar(base, indice_cromatico(base))
        if len(supergrafo.aristas) > max_aristas:
            continue
        entregados += 1
        yield f"aleatorio-{semilla}-{intentos}", supergrafo


def guardar_tabla(tabla: DataFrame, ruta: Path | str) -> Path:
    """Guarda la tabla como CSV creando la carpeta de destino."""
    ruta_archivo = Path(ruta)
    ruta_archivo.parent.mkdir(parents=True, exist_ok=True)
    tabla.to_csv(ruta_archivo, index=False)
    return ruta_archivo


__all__ = [
    "resumen_clases",
    "barrer_teorema",
    "barrer_abanicos",
    "barrer_inversion",
    "barrer_transformacion",
    "calcular_fracciones",
    "barrer_paridad",
    "grafos_regularizados_aleatorios",
    "guardar_tabla",
]
