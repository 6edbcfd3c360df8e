"""Script auxiliar para barrer el corpus de grafos pequeños y guardar las tablas en CSV.

Genera en `data/processed/`:
- `teorema.csv`: clases de Kempe con χ'+1 y χ'+2 colores.
- `abanicos.csv`: forma de cada abanico en grafos χ'-regulares.
- `inversion.csv`: estrategia usada al invertir cada abanico ciclo.
- `transformacion.csv`: transformaciones hacia χ'-coloraciones verificadas paso a paso.
- `paridad.csv`: conteos de colores faltantes en K4 (exhaustivo) y K6 (muestreado).
"""

from pathlib import Path
import argparse
import sys

import networkx as nx
import pandas as pd

# Se agrega el directorio raíz del repositorio al sys.path para resolver el paquete `src`.
sys.path.append(str(Path(__file__).resolve().parents[1]))

from src.analytics.corpus import (
    barrer_abanicos,
    barrer_inversion,
    barrer_paridad,
    barrer_teorema,
    barrer_transformacion,
    calcular_fracciones,
    grafos_regularizados_aleatorios,
    guardar_tabla,
)
from src.configuracion import obtener_configuracion
from src.coloreo import colorear_vizing
from src.nucleo import Grafo
from src.oraculo import enumerar_coloraciones, generar_corpus, generar_corpus_regular, muestrear_coloraciones


def main() -> None:
    """Ejecuta los cinco barridos y muestra un resumen por pantalla."""
    analizador = argparse.ArgumentParser(description="Barridos del corpus de escritorio.")
    analizador.add_argument("--salida", type=Path, default=Path("data/processed"))
    analizador.add_argument("--aleatorios", type=int, default=5, help="Supergrafos regulares aleatorios extra.")
    analizador.add_argument("--max-casos", type=int, default=20, help="Casos de transformación por grafo.")
    analizador.add_argument("--muestras-k6", type=int, default=10_000, help="Coloraciones de K6 para la paridad.")
    argumentos = analizador.parse_args()

    configuracion = obtener_configuracion()
    presupuesto = configuracion.presupuesto()
    limites = configuracion.limites()

    teorema = barrer_teorema(generar_corpus(), limites)
    ruta = guardar_tabla(teorema, argumentos.salida / "teorema.csv")
    violaciones = teorema[(teorema["paleta"] == teorema["chi"] + 1) & (teorema["clases"] != 1)]
    print(f"Teorema: {len(teorema)} filas, {len(violaciones)} grafos con más de una clase -> {ruta}")

    regulares = list(generar_corpus_regular())
    regulares.extend(grafos_regularizados_aleatorios(argumentos.aleatorios, configuracion.semilla))

    abanicos = barrer_abanicos(regulares, limites)
    ruta = guardar_tabla(abanicos, argumentos.salida / "abanicos.csv")
    print(f"Abanicos: {len(abanicos)} filas -> {ruta}")
    print(abanicos["forma"].value_counts().to_string())

    inversion = barrer_inversion(regulares, presupuesto, limites)
    ruta = guardar_tabla(inversion, argumentos.salida / "inversion.csv")
    print(f"Inversión: {len(inversion)} ciclos -> {ruta}")
    for nombre, valor in calcular_fracciones(inversion).items():
        print(f"  {nombre}: {valor:.3f}")

    transformacion = barrer_transformacion(generar_corpus(), presupuesto, limites, argumentos.max_casos)
    ruta = guardar_tabla(transformacion, argumentos.salida / "transformacion.csv")
    correctas = int(transformacion["correcto"].sum()) if len(transformacion) else 0
    print(f"Transformación: {correctas}/{len(transformacion)} trazas verificadas -> {ruta}")

    k4 = Grafo.desde_networkx(nx.complete_graph(4))
    k6 = Grafo.desde_networkx(nx.complete_graph(6))
    muestras = muestrear_coloraciones(colorear_vizing(k6), argumentos.muestras_k6, configuracion.semilla)
    paridad = pd.concat(
        [barrer_paridad("K4", enumerar_coloraciones(k4, 4, limites)), barrer_paridad("K6", muestras)],
        ignore_index=True,
    )
    ruta = guardar_tabla(paridad, argumentos.salida / "paridad.csv")
    print(f"Paridad: {int(paridad['pares'].sum())}/{len(paridad)} coloraciones con conteos pares -> {ruta}")


if __name__ == "__main__":
    main()
