"""Pruebas del oráculo exhaustivo: índice cromático, enumeración, clases de Kempe y búsqueda acotada."""

from __future__ import annotations

import pytest

from config.presupuestos import LimitesOraculo, PresupuestoBusqueda
from src.errores import ErrorFormato, ErrorLimiteOraculo, ErrorPresupuestoAgotado
from src.kempe import RegistroIntercambio, reproducir
from src.nucleo import Coloracion, Grafo, es_propia
from src.oraculo import (
    buscar,
    clases_reconfiguracion,
    coloracion_optima,
    enumerar_coloraciones,
    generar_corpus,
    generar_corpus_regular,
    grafo_reconfiguracion,
    indice_cromatico,
    muestrear_coloraciones,
    traza_mas_corta,
)


@pytest.mark.parametrize(
    ("nombre", "esperado"),
    [
        ("triangulo", 3),
        ("completo_cuatro", 3),
        ("ciclo_cuatro", 2),
        ("ciclo_cinco", 3),
        ("camino_tres", 2),
        ("prisma", 3),
    ],
)
def test_indice_cromatico(nombre: str, esperado: int, request: pytest.FixtureRequest) -> None:
    grafo = request.getfixturevalue(nombre)
    assert indice_cromatico(grafo) == esperado
    optima = coloracion_optima(grafo)
    assert optima.paleta == esperado
    assert es_propia(grafo, optima)


def test_indice_cromatico_casos_borde() -> None:
    assert indice_cromatico(Grafo(num_vertices=3, aristas=frozenset())) == 0
    assert indice_cromatico(Grafo.desde_aristas([(0, 1), (0, 2), (0, 3)])) == 3


def test_enumeracion_del_triangulo(triangulo: Grafo) -> None:
    coloraciones = enumerar_coloraciones(triangulo, 3)
    assert len(coloraciones) == 6
    assert coloraciones[0].colores == (1, 2, 3)
    assert [c.colores for c in coloraciones] == sorted(c.colores for c in coloraciones)
    assert len(enumerar_coloraciones(triangulo, 4)) == 24
    assert enumerar_coloraciones(triangulo, 2) == []


def test_clases_con_chi_colores(completo_cuatro: Grafo, ciclo_cuatro: Grafo) -> None:
    """K4 con 3 colores: seis coloraciones, una clase de diámetro 2. C4 con 2 colores: dos, diámetro 1."""
    reconfiguracion = grafo_reconfiguracion(completo_cuatro, 3)
    assert len(reconfiguracion.coloraciones) == 6
    assert reconfiguracion.clases() == [list(range(6))]
    assert reconfiguracion.diametro(range(6)) == 2

    ciclo = grafo_reconfiguracion(ciclo_cuatro, 2)
    assert ciclo.clases() == [[0, 1]]
    assert ciclo.diametro([0, 1]) == 1


def test_una_sola_clase_con_chi_mas_uno_en_el_corpus() -> None:
    """Con χ'+1 colores todas las coloraciones de cada grafo chico forman una sola clase de Kempe."""
    for nombre, grafo in generar_corpus(max_vertices=4):
        chi = indice_cromatico(grafo)
        clases = clases_reconfiguracion(grafo, chi + 1)
        assert len(clases) == 1, nombre


def test_guarda_del_oraculo(completo_cuatro: Grafo) -> None:
    with pytest.raises(ErrorLimiteOraculo):
        enumerar_coloraciones(completo_cuatro, 3, LimitesOraculo(max_aristas=5))


def test_traza_mas_corta_lexicografica(triangulo_ciclo: Coloracion) -> None:
    grafo = triangulo_ciclo.grafo
    destino = Coloracion(grafo, 3, (2, 1, 3))
    traza = traza_mas_corta(grafo, 3, triangulo_ciclo, destino)
    assert traza == (RegistroIntercambio((1, 2), (0, 1)),)
    assert traza_mas_corta(grafo, 3, triangulo_ciclo, triangulo_ciclo) == ()

    impropia = Coloracion(grafo, 3, (1, 1, 2))
    with pytest.raises(ErrorFormato):
        traza_mas_corta(grafo, 3, impropia, destino)


def test_buscar_respeta_el_presupuesto(triangulo_ciclo: Coloracion) -> None:
    meta = Coloracion(triangulo_ciclo.grafo, 3, (3, 1, 2))
    final, traza = buscar(triangulo_ciclo, lambda c: c == meta)
    assert final == meta
    assert reproducir(triangulo_ciclo, traza) == meta

    with pytest.raises(ErrorPresupuestoAgotado):
        buscar(triangulo_ciclo, lambda c: c == meta, PresupuestoBusqueda(max_estados=1))
    with pytest.raises(ErrorPresupuestoAgotado):
        buscar(triangulo_ciclo, lambda c: c == meta, PresupuestoBusqueda(max_profundidad=1))
    assert buscar(triangulo_ciclo, lambda c: c == triangulo_ciclo, PresupuestoBusqueda(0, 0)) == (triangulo_ciclo, ())


def test_buscar_no_toca_colores_congelados(triangulo_ciclo: Coloracion) -> None:
    meta = Coloracion(triangulo_ciclo.grafo, 3, (2, 1, 3))
    with pytest.raises(ErrorPresupuestoAgotado):
        buscar(triangulo_ciclo, lambda c: c == meta, congelados=[1])


def test_corpus_del_atlas() -> None:
    corpus = generar_corpus(max_vertices=3)
    assert [nombre for nombre, _ in corpus] == ["atlas-3", "atlas-6", "atlas-7"]

    regulares = generar_corpus_regular(max_aristas=6)
    assert regulares
    for _, grafo in regulares:
        assert grafo.es_regular()
        assert indice_cromatico(grafo) == grafo.grado_maximo
    assert any(g.num_vertices == 4 and len(g.aristas) == 4 for _, g in regulares)


def test_muestreo_reproducible(prisma: Grafo) -> None:
    inicial = coloracion_optima(prisma).con_paleta(4)
    primera = list(muestrear_coloraciones(inicial, 5, semilla=7))
    segunda = list(muestrear_coloraciones(inicial, 5, semilla=7))
    assert primera == segunda
    assert all(es_propia(prisma, coloracion) for coloracion in primera)
