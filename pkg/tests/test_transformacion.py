"""Pruebas del conductor que lleva una (χ'+1)-coloración a una χ'-coloración objetivo."""

from __future__ import annotations

import pytest

from config.presupuestos import PresupuestoBusqueda
from src.analytics.corpus import barrer_transformacion
from src.coloreo import colorear_vizing
from src.errores import ErrorFormato, ErrorPresupuestoAgotado
from src.kempe import pasos_reproduccion, reproducir
from src.nucleo import Coloracion, Grafo, es_propia
from src.oraculo import coloracion_optima, enumerar_coloraciones, generar_corpus, muestrear_coloraciones
from src.transformacion import alinear_clase, equivalencia, hacia_objetivo, medir, transformar


def _verificar(inicio: Coloracion, alfa: Coloracion, traza: tuple) -> None:
    grafo = alfa.grafo
    actual = inicio.con_paleta(alfa.paleta + 1)
    for actual in pasos_reproduccion(actual, traza):
        assert es_propia(grafo, actual)
    assert actual.colores == alfa.colores


@pytest.fixture()
def alfa_c4(ciclo_cuatro: Grafo) -> Coloracion:
    return Coloracion.desde_mapa(ciclo_cuatro, 2, {(0, 1): 1, (1, 2): 2, (2, 3): 1, (0, 3): 2})


def test_c4_llega_al_objetivo(ciclo_cuatro: Grafo, alfa_c4: Coloracion) -> None:
    inicio = Coloracion.desde_mapa(ciclo_cuatro, 3, {(0, 1): 2, (1, 2): 1, (2, 3): 2, (0, 3): 1})
    resultado = transformar(inicio, alfa_c4)
    assert not resultado.regularizado
    assert len(resultado.estados) == 2
    assert all(estado.alineado for estado in resultado.estados)
    _verificar(inicio, alfa_c4, resultado.traza)


def test_objetivo_igual_al_inicio_da_traza_vacia(alfa_c4: Coloracion) -> None:
    assert hacia_objetivo(alfa_c4.con_paleta(3), alfa_c4, PresupuestoBusqueda(0, 0)) == ()


def test_grafo_no_regular_pasa_por_el_supergrafo(camino_tres: Grafo) -> None:
    alfa = Coloracion.desde_mapa(camino_tres, 2, {(0, 1): 1, (1, 2): 2})
    inicio = Coloracion.desde_mapa(camino_tres, 3, {(0, 1): 3, (1, 2): 1})
    resultado = transformar(inicio, alfa)
    assert resultado.regularizado
    _verificar(inicio, alfa, resultado.traza)


@pytest.mark.parametrize("semilla", range(4))
def test_k4_desde_coloraciones_aleatorias(completo_cuatro: Grafo, semilla: int) -> None:
    alfa = coloracion_optima(completo_cuatro)
    *_, inicio = muestrear_coloraciones(colorear_vizing(completo_cuatro), 1, semilla, pasos_entre_muestras=10)
    _verificar(inicio, alfa, hacia_objetivo(inicio, alfa))


def test_ciclo_impar_desde_varias_coloraciones(ciclo_cinco: Grafo) -> None:
    """C5 no es χ'-regular: una de cada cuarenta 4-coloraciones se lleva a la primera 3-coloración."""
    alfa = coloracion_optima(ciclo_cinco)
    for inicio in enumerar_coloraciones(ciclo_cinco, 4)[::40]:
        _verificar(inicio, alfa, hacia_objetivo(inicio, alfa))


def test_equivalencia_entre_dos_coloraciones(ciclo_cuatro: Grafo, alfa_c4: Coloracion) -> None:
    primera = Coloracion.desde_mapa(ciclo_cuatro, 3, {(0, 1): 3, (1, 2): 1, (2, 3): 2, (0, 3): 1})
    segunda = Coloracion.desde_mapa(ciclo_cuatro, 3, {(0, 1): 1, (1, 2): 3, (2, 3): 1, (0, 3): 2})
    traza = equivalencia(primera, segunda, alfa_c4)
    assert reproducir(primera, traza) == segunda


def test_presupuesto_nulo_con_clase_desalineada(ciclo_cuatro: Grafo, alfa_c4: Coloracion) -> None:
    inicio = Coloracion.desde_mapa(ciclo_cuatro, 3, {(0, 1): 3, (1, 2): 1, (2, 3): 2, (0, 3): 1})
    with pytest.raises(ErrorPresupuestoAgotado):
        hacia_objetivo(inicio, alfa_c4, PresupuestoBusqueda(max_estados=0, max_profundidad=0))


def test_entradas_invalidas(ciclo_cuatro: Grafo, triangulo_ciclo: Coloracion, alfa_c4: Coloracion) -> None:
    with pytest.raises(ErrorFormato) as distinto:
        transformar(triangulo_ciclo, alfa_c4)
    assert distinto.value.codigo == "GRAFO_DISTINTO"

    impropia = Coloracion(ciclo_cuatro, 3, (1, 1, 2, 3))
    with pytest.raises(ErrorFormato) as error_impropia:
        transformar(impropia, alfa_c4)
    assert error_impropia.value.codigo == "COLORACION_IMPROPIA"

    excedida = Coloracion.desde_mapa(ciclo_cuatro, 4, {(0, 1): 4, (1, 2): 1, (2, 3): 2, (0, 3): 1})
    with pytest.raises(ErrorFormato) as error_paleta:
        transformar(excedida, alfa_c4)
    assert error_paleta.value.codigo == "PALETA_EXCEDIDA"


def test_alinear_una_clase(ciclo_cuatro: Grafo) -> None:
    inicio = Coloracion.desde_mapa(ciclo_cuatro, 3, {(0, 1): 3, (1, 2): 1, (2, 3): 2, (0, 3): 1})
    emparejamiento = [(0, 1), (2, 3)]
    assert medir(inicio, emparejamiento, 1) == (2, 2)

    estado = alinear_clase(inicio, emparejamiento, 1)
    assert estado.alineado
    assert medir(estado.coloracion, emparejamiento, 1) == (0, 0)
    assert reproducir(inicio, estado.traza) == estado.coloracion
    assert estado.diagnostico.pasos_totales >= 1


def test_alinear_rechaza_no_emparejamientos(ciclo_cuatro: Grafo) -> None:
    inicio = Coloracion.desde_mapa(ciclo_cuatro, 3, {(0, 1): 3, (1, 2): 1, (2, 3): 2, (0, 3): 1})
    with pytest.raises(ErrorFormato) as error:
        alinear_clase(inicio, [(0, 1), (1, 2)], 1)
    assert error.value.codigo == "NO_ES_EMPAREJAMIENTO"


@pytest.mark.parametrize("semilla", range(4))
def test_estados_minimos_sin_violaciones_en_k4(completo_cuatro: Grafo, semilla: int) -> None:
    alfa = coloracion_optima(completo_cuatro)
    *_, inicio = muestrear_coloraciones(colorear_vizing(completo_cuatro), 1, semilla, pasos_entre_muestras=10)
    resultado = transformar(inicio, alfa)
    assert resultado.diagnostico().violaciones_lemas == 0
    _verificar(inicio, alfa, resultado.traza)


def test_barrido_pequeno_sin_violaciones() -> None:
    tabla = barrer_transformacion(generar_corpus(max_vertices=4, max_aristas=5), max_casos_por_grafo=4)
    assert tabla["correcto"].all()
    assert (tabla["violaciones_lemas"] == 0).all()


@pytest.mark.lento
def test_barrido_de_transformacion_en_todo_el_corpus() -> None:
    """Cada (χ'+1)-coloración llega a cada χ'-coloración sin estados mínimos que contradigan los lemas."""
    tabla = barrer_transformacion(generar_corpus())
    assert tabla["correcto"].all()
    assert (tabla["violaciones_lemas"] == 0).all()
