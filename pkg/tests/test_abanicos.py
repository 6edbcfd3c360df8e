"""Pruebas de construcción de abanicos, su forma y los predicados saturado, ajustado y entrelazado."""

from __future__ import annotations

import pytest

from src.abanicos import (
    Abanico,
    FormaAbanico,
    abanico_por_color,
    abanicos_de,
    colores_abanico,
    construir_abanico,
    entrelazados,
    es_ajustado,
    esta_saturado,
    forma_abanico,
    sucesor,
    vertice_faltante,
)
from src.errores import ErrorFormato, ErrorRegimen
from src.nucleo import Coloracion, Grafo


@pytest.fixture()
def ciclo_cuatro_camino(ciclo_cuatro: Grafo) -> Coloracion:
    """C4 con 01=1, 12=2, 23=3, 03=2: m(0)=m(1)=3 y m(2)=m(3)=1."""
    return Coloracion.desde_mapa(ciclo_cuatro, 3, {(0, 1): 1, (1, 2): 2, (2, 3): 3, (0, 3): 2})


def test_abanico_ciclo_de_tamano_dos(triangulo_ciclo: Coloracion) -> None:
    abanico = construir_abanico(triangulo_ciclo, 0, (1, 0))
    assert abanico.forma is FormaAbanico.CICLO
    assert abanico.secuencia == ((0, 1), (0, 2))
    assert abanico.vertices == (1, 2)
    assert abanico.faltante_centro == 3
    assert abanico.colores_aristas == (1, 2)
    assert abanico.faltantes == (2, 1)
    assert abanico.indice_retorno is None
    assert forma_abanico(abanico) is FormaAbanico.CICLO


def test_sucesor_sigue_el_color_faltante(triangulo_ciclo: Coloracion) -> None:
    assert sucesor(triangulo_ciclo, 0, (0, 1)) == (0, 2)
    assert sucesor(triangulo_ciclo, 0, (0, 2)) == (0, 1)


def test_abanico_camino(ciclo_cuatro_camino: Coloracion) -> None:
    abanico = construir_abanico(ciclo_cuatro_camino, 0, (0, 3))
    assert abanico.forma is FormaAbanico.CAMINO
    assert abanico.vertices == (3, 1)
    assert abanico.ultimo == 1
    assert len(abanico) == 2
    assert sucesor(ciclo_cuatro_camino, 0, (0, 1)) is None
    assert vertice_faltante(abanico, 3) == 1
    assert vertice_faltante(abanico, 2) is None


def test_predicados_de_ciclo_en_triangulo(triangulo_ciclo: Coloracion) -> None:
    abanico = construir_abanico(triangulo_ciclo, 0, (0, 1))
    assert esta_saturado(triangulo_ciclo, abanico)
    assert es_ajustado(triangulo_ciclo, abanico)


def test_predicados_de_ciclo_rechazan_caminos(ciclo_cuatro_camino: Coloracion) -> None:
    abanico = construir_abanico(ciclo_cuatro_camino, 0, (0, 3))
    with pytest.raises(ErrorRegimen):
        esta_saturado(ciclo_cuatro_camino, abanico)
    with pytest.raises(ErrorRegimen):
        es_ajustado(ciclo_cuatro_camino, abanico)


def test_fuera_de_regimen(camino_tres: Grafo, triangulo: Grafo) -> None:
    with pytest.raises(ErrorRegimen):
        construir_abanico(Coloracion(camino_tres, 2, (1, 2)), 1, (0, 1))
    with pytest.raises(ErrorRegimen):
        construir_abanico(Coloracion(triangulo, 4, (1, 2, 3)), 0, (0, 1))


def test_arista_no_incidente(triangulo_ciclo: Coloracion) -> None:
    with pytest.raises(ErrorFormato):
        construir_abanico(triangulo_ciclo, 0, (1, 2))


def _abanico_sintetico(faltantes: tuple[int, ...]) -> Abanico:
    return Abanico(
        centro=0,
        secuencia=((0, 1), (0, 2), (0, 3)),
        forma=FormaAbanico.CAMINO,
        indice_retorno=None,
        faltante_centro=4,
        colores_aristas=(1, 2, 3),
        faltantes=faltantes,
    )


@pytest.mark.parametrize(
    ("faltantes", "forma"),
    [
        ((2, 3, 4), FormaAbanico.CAMINO),
        ((2, 3, 1), FormaAbanico.CICLO),
        ((2, 3, 2), FormaAbanico.COMETA),
    ],
)
def test_forma_segun_el_ultimo_faltante(faltantes: tuple[int, ...], forma: FormaAbanico) -> None:
    assert forma_abanico(_abanico_sintetico(faltantes)) is forma


def test_forma_de_abanico_no_maximal() -> None:
    with pytest.raises(ErrorRegimen):
        forma_abanico(_abanico_sintetico((2, 3, 5)))


def test_colores_y_entrelazado(triangulo_ciclo: Coloracion) -> None:
    desde_uno = abanico_por_color(triangulo_ciclo, 0, 1)
    desde_dos = abanico_por_color(triangulo_ciclo, 0, 2)
    assert colores_abanico(desde_uno) == frozenset({1, 2})
    assert desde_dos.secuencia == ((0, 2), (0, 1))
    assert entrelazados(desde_uno, desde_uno)
    assert entrelazados(desde_uno, desde_dos)


def test_mismo_centro_con_colores_disjuntos_estan_entrelazados(completo_cuatro: Grafo) -> None:
    coloracion = Coloracion(completo_cuatro, 4, (1, 2, 3, 3, 2, 1))
    desde_uno = abanico_por_color(coloracion, 0, 1)
    desde_dos = abanico_por_color(coloracion, 0, 2)
    assert colores_abanico(desde_uno) == frozenset({1})
    assert colores_abanico(desde_dos) == frozenset({2})
    assert entrelazados(desde_uno, desde_dos)


def test_faltantes_comunes_no_cuentan_para_el_entrelazado() -> None:
    primero = Abanico(0, ((0, 1),), FormaAbanico.CAMINO, None, 5, (1,), (5,))
    segundo = Abanico(0, ((0, 2),), FormaAbanico.CAMINO, None, 5, (2,), (5,))
    assert entrelazados(primero, segundo)


def test_mismo_centro_con_distinto_vertice_faltante(completo_cuatro: Grafo) -> None:
    """K4 con m(0)=4 y m(1)=m(2)=3: ambos abanicos pasan por la arista 03 de color 3."""
    coloracion = Coloracion(completo_cuatro, 4, (1, 2, 3, 4, 2, 1))
    desde_uno = abanico_por_color(coloracion, 0, 1)
    desde_dos = abanico_por_color(coloracion, 0, 2)
    assert desde_uno.secuencia == ((0, 1), (0, 3))
    assert desde_dos.secuencia == ((0, 2), (0, 3))
    assert colores_abanico(desde_uno) & colores_abanico(desde_dos) == frozenset({3})
    assert vertice_faltante(desde_uno, 3) == 1
    assert vertice_faltante(desde_dos, 3) == 2
    assert not entrelazados(desde_uno, desde_dos)


def test_abanico_por_color_sin_arista(triangulo_ciclo: Coloracion) -> None:
    with pytest.raises(ErrorFormato) as error:
        abanico_por_color(triangulo_ciclo, 0, 3)
    assert error.value.codigo == "SIN_ARISTA_DE_COLOR"


def test_abanicos_de_todos_los_vertices_tienen_forma_coherente(completo_cuatro: Grafo) -> None:
    coloracion = Coloracion(completo_cuatro, 4, (1, 2, 3, 3, 2, 1))
    for v in range(completo_cuatro.num_vertices):
        for abanico in abanicos_de(coloracion, v):
            assert abanico.forma is FormaAbanico.CAMINO
            assert len(abanico) == 1


def test_predicados_falsos_en_el_cubo(cubo_ciclo_tres: Coloracion) -> None:
    """K_0(4, 2) es 0-2-3 y no llega a 1; K_4(1, 2) es 4-5 y no llega a 1."""
    abanico = construir_abanico(cubo_ciclo_tres, 0, (0, 1))
    assert abanico.forma is FormaAbanico.CICLO
    assert len(abanico) == 3
    assert abanico.faltantes == (2, 3, 1)
    assert not esta_saturado(cubo_ciclo_tres, abanico)
    assert not es_ajustado(cubo_ciclo_tres, abanico)
