"""Pruebas del coloreo constructivo con Δ+1 colores."""

from __future__ import annotations

import networkx as nx
import pytest

from src.coloreo import colorear_vizing
from src.nucleo import Grafo, es_propia


@pytest.mark.parametrize("nombre", ["triangulo", "completo_cuatro", "ciclo_cinco", "camino_tres", "prisma"])
def test_coloreo_propio_con_delta_mas_uno(nombre: str, request: pytest.FixtureRequest) -> None:
    grafo: Grafo = request.getfixturevalue(nombre)
    coloracion = colorear_vizing(grafo)
    assert coloracion.paleta == grafo.grado_maximo + 1
    assert es_propia(grafo, coloracion)


def test_petersen_y_completos_mayores() -> None:
    for grafo_nx in (nx.petersen_graph(), nx.complete_graph(7), nx.complete_bipartite_graph(4, 5)):
        grafo = Grafo.desde_networkx(grafo_nx)
        coloracion = colorear_vizing(grafo)
        assert es_propia(grafo, coloracion)
        assert max(coloracion.colores) <= grafo.grado_maximo + 1


def test_paleta_mayor_y_grafo_vacio(triangulo: Grafo) -> None:
    assert colorear_vizing(triangulo, paleta=6).paleta == 6
    vacio = colorear_vizing(Grafo(num_vertices=2, aristas=frozenset()))
    assert vacio.colores == ()
    assert vacio.paleta == 0
