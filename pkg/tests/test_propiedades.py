"""Pruebas basadas en propiedades con hypothesis (generación automática de casos) sobre grafos aleatorios."""

from __future__ import annotations

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from src.abanicos import FormaAbanico, abanicos_de, forma_abanico
from src.coloreo import colorear_vizing
from src.inversion import invertir_ciclo, objetivo_inversion
from src.kempe import (
    componente,
    identicas_en,
    intercambiar,
    intercambiar_desde,
    invertir_traza,
    reproducir,
    vecinos_kempe,
)
from src.nucleo import Coloracion, Grafo, es_propia
from src.oraculo import (
    coloracion_optima,
    generar_corpus,
    generar_corpus_regular,
    indice_cromatico,
    muestrear_coloraciones,
)
from src.regularizacion import elevar_coloracion, proyectar_traza, regularizar, restringir_coloracion
from src.transformacion import hacia_objetivo

PROPIEDADES = settings(
    max_examples=100,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)

_REGULARES = generar_corpus_regular(max_aristas=9)
_PEQUENOS = [caso for caso in generar_corpus(max_vertices=5, max_aristas=6) if caso[1].grado_maximo <= 3]


@st.composite
def _grafos(draw: st.DrawFn, max_vertices: int = 6, max_aristas: int = 8) -> Grafo:
    n = draw(st.integers(min_value=2, max_value=max_vertices))
    posibles = [(u, v) for u in range(n) for v in range(u + 1, n)]
    aristas = draw(st.lists(st.sampled_from(posibles), unique=True, min_size=1, max_size=min(max_aristas, len(posibles))))
    return Grafo.desde_aristas(aristas, num_vertices=n)


@st.composite
def _coloraciones(draw: st.DrawFn) -> Coloracion:
    """(Δ+1)-coloración aleatoria alcanzada por una caminata de Kempe desde el coloreo de Vizing."""
    grafo = draw(_grafos())
    semilla = draw(st.integers(min_value=0, max_value=10_000))
    pasos = draw(st.integers(min_value=0, max_value=12))
    *_, coloracion = muestrear_coloraciones(colorear_vizing(grafo), 1, semilla, pasos_entre_muestras=pasos)
    return coloracion


@st.composite
def _coloraciones_regulares(draw: st.DrawFn) -> Coloracion:
    _, grafo = draw(st.sampled_from(_REGULARES))
    semilla = draw(st.integers(min_value=0, max_value=10_000))
    *_, coloracion = muestrear_coloraciones(colorear_vizing(grafo), 1, semilla, pasos_entre_muestras=8)
    return coloracion


@PROPIEDADES
@given(_coloraciones(), st.data())
def test_intercambio_es_involucion_y_preserva_propiedad(coloracion: Coloracion, datos: st.DataObject) -> None:
    grafo = coloracion.grafo
    arista = datos.draw(st.sampled_from(grafo.aristas_ordenadas))
    otro = datos.draw(st.integers(min_value=1, max_value=coloracion.paleta).filter(lambda c: c != coloracion.color(arista)))
    cadena = componente(coloracion, arista, coloracion.color(arista), otro)
    nueva = intercambiar(coloracion, cadena)
    assert es_propia(grafo, nueva)
    assert intercambiar(nueva, componente(nueva, arista, *cadena.colores)) == coloracion


@PROPIEDADES
@given(_coloraciones())
def test_vecinos_son_propios_y_distintos(coloracion: Coloracion) -> None:
    for registro, vecina in vecinos_kempe(coloracion):
        assert es_propia(coloracion.grafo, vecina)
        assert vecina != coloracion
        assert reproducir(coloracion, (registro,)) == vecina
        assert reproducir(vecina, invertir_traza((registro,))) == coloracion


@PROPIEDADES
@given(_coloraciones_regulares())
def test_forma_de_abanico_recalculada(coloracion: Coloracion) -> None:
    for v in range(coloracion.grafo.num_vertices):
        for abanico in abanicos_de(coloracion, v):
            assert forma_abanico(abanico) is abanico.forma


@PROPIEDADES
@given(_coloraciones_regulares())
def test_inversion_de_ciclos_llega_al_objetivo(coloracion: Coloracion) -> None:
    for v in range(coloracion.grafo.num_vertices):
        for abanico in abanicos_de(coloracion, v):
            if abanico.forma is not FormaAbanico.CICLO:
                continue
            resultado = invertir_ciclo(coloracion, abanico)
            assert resultado.final == objetivo_inversion(coloracion, abanico)
            assert reproducir(coloracion, resultado.traza) == resultado.final


@PROPIEDADES
@given(_grafos())
def test_regularizacion_es_chi_regular_y_contiene_al_original(grafo: Grafo) -> None:
    chi = indice_cromatico(grafo)
    supergrafo, incrustacion = regularizar(grafo, chi)
    assert supergrafo.es_regular(chi)
    assert len(incrustacion.niveles) == chi - grafo.grado_minimo
    inducidas = {arista for arista in supergrafo.aristas if arista[1] < grafo.num_vertices}
    assert inducidas == grafo.aristas
    optima = coloracion_optima(grafo)
    assert restringir_coloracion(elevar_coloracion(optima, incrustacion), incrustacion) == optima


@settings(max_examples=30, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.sampled_from(_PEQUENOS), st.integers(min_value=0, max_value=10_000))
def test_transformacion_hacia_la_optima(caso: tuple[str, Grafo], semilla: int) -> None:
    _, grafo = caso
    alfa = coloracion_optima(grafo)
    *_, inicio = muestrear_coloraciones(colorear_vizing(grafo), 1, semilla, pasos_entre_muestras=6)
    traza = hacia_objetivo(inicio, alfa)
    final = reproducir(inicio.con_paleta(alfa.paleta + 1), traza)
    assert final.colores == alfa.colores


@PROPIEDADES
@given(_coloraciones(), st.data())
def test_intercambio_estable_fuera_de_la_cadena(coloracion: Coloracion, datos: st.DataObject) -> None:
    """Fuera de las aristas y vértices de la cadena nada cambia, ni al intercambiar ni al deshacer."""
    grafo = coloracion.grafo
    arista = datos.draw(st.sampled_from(grafo.aristas_ordenadas))
    otro = datos.draw(st.integers(min_value=1, max_value=coloracion.paleta).filter(lambda c: c != coloracion.color(arista)))
    cadena = componente(coloracion, arista, coloracion.color(arista), otro)
    fuera = [
        *(a for a in grafo.aristas_ordenadas if a not in cadena.aristas),
        *(v for v in range(grafo.num_vertices) if v not in cadena.vertices),
    ]
    nueva = intercambiar(coloracion, cadena)
    assert identicas_en(coloracion, nueva, fuera)
    assert not identicas_en(coloracion, nueva, [arista])
    deshecha = intercambiar(nueva, componente(nueva, arista, *cadena.colores))
    assert identicas_en(nueva, deshecha, fuera)


@PROPIEDADES
@given(_coloraciones(), st.data())
def test_traza_del_supergrafo_se_proyecta(inicio: Coloracion, datos: st.DataObject) -> None:
    """Una caminata aleatoria en el supergrafo proyectada reproduce su restricción al grafo original."""
    grafo = inicio.grafo
    _, incrustacion = regularizar(grafo, indice_cromatico(grafo))
    elevada = elevar_coloracion(inicio, incrustacion)
    aristas = elevada.grafo.aristas_ordenadas
    pasos = datos.draw(
        st.lists(
            st.tuples(st.integers(min_value=0, max_value=len(aristas) - 1), st.integers(min_value=1, max_value=inicio.paleta)),
            max_size=10,
        )
    )
    actual = elevada
    traza = []
    for posicion, color in pasos:
        arista = aristas[posicion]
        if color == actual.color(arista):
            continue
        actual, registro = intercambiar_desde(actual, arista, actual.color(arista), color)
        traza.append(registro)

    proyectada = proyectar_traza(tuple(traza), incrustacion, inicio)
    final = reproducir(inicio, proyectada)
    assert es_propia(grafo, final)
    assert final == restringir_coloracion(actual, incrustacion)


@pytest.mark.lento
@settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.sampled_from(generar_corpus()), st.integers(min_value=0, max_value=10_000))
def test_transformacion_hacia_la_optima_en_todo_el_corpus(caso: tuple[str, Grafo], semilla: int) -> None:
    _, grafo = caso
    alfa = coloracion_optima(grafo)
    *_, inicio = muestrear_coloraciones(colorear_vizing(grafo), 1, semilla, pasos_entre_muestras=10)
    final = reproducir(inicio.con_paleta(alfa.paleta + 1), hacia_objetivo(inicio, alfa))
    assert final.colores == alfa.colores
