"""Configuración compartida de pytest: importaciones del paquete y grafos pequeños de referencia."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

RAIZ_PROYECTO = Path(__file__).resolve().parent.parent
if str(RAIZ_PROYECTO) not in sys.path:
    sys.path.insert(0, str(RAIZ_PROYECTO))

from src.configuracion import limpiar_cache_configuracion  # noqa: E402
from src.nucleo import Coloracion, Grafo  # noqa: E402


def pytest_configure(config: pytest.Config) -> None:
    config.addinivalue_line("markers", "lento: barridos sobre el corpus completo (más de unos segundos)")


@pytest.fixture(autouse=True)
def configuracion_limpia(monkeypatch: pytest.MonkeyPatch) -> None:
    """Evita que variables KEMPE_* del entorno o un `.env` local alteren los presupuestos de las pruebas."""
    for nombre in ("KEMPE_MAX_ESTADOS", "KEMPE_MAX_PROFUNDIDAD", "KEMPE_MAX_ARISTAS_ORACULO", "KEMPE_SEMILLA"):
        monkeypatch.delenv(nombre, raising=False)
    limpiar_cache_configuracion()


@pytest.fixture()
def ruta_fixtures() -> Path:
    """Entrega la carpeta con los archivos de grafos y coloraciones de ejemplo."""
    return Path(__file__).resolve().parent / "fixtures"


@pytest.fixture()
def triangulo() -> Grafo:
    """K3: 2-regular con índice cromático 3."""
    return Grafo.desde_aristas([(0, 1), (0, 2), (1, 2)])


@pytest.fixture()
def completo_cuatro() -> Grafo:
    """K4: 3-regular y 3-arista-colorable (tres emparejamientos perfectos)."""
    return Grafo.desde_aristas([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


@pytest.fixture()
def ciclo_cuatro() -> Grafo:
    """C4: ciclo par, χ'-regular con χ' = 2."""
    return Grafo.desde_aristas([(0, 1), (1, 2), (2, 3), (0, 3)])


@pytest.fixture()
def ciclo_cinco() -> Grafo:
    """C5: ciclo impar, índice cromático 3."""
    return Grafo.desde_aristas([(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])


@pytest.fixture()
def camino_tres() -> Grafo:
    """P3: camino 0-1-2, el ejemplo más chico que necesita regularización."""
    return Grafo.desde_aristas([(0, 1), (1, 2)])


@pytest.fixture()
def prisma() -> Grafo:
    """Prisma triangular: 3-regular con 9 aristas y χ' = 3."""
    return Grafo.desde_aristas(
        [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)]
    )


@pytest.fixture()
def triangulo_ciclo(triangulo: Grafo) -> Coloracion:
    """K3 con colores 1, 2, 3: cada vértice tiene un único faltante y el abanico en 0 es un ciclo de tamaño dos."""
    return Coloracion.desde_mapa(triangulo, 3, {(0, 1): 1, (0, 2): 2, (1, 2): 3})


@pytest.fixture()
def cubo_ciclo_tres() -> Coloracion:
    """Cubo Q3 con 4 colores: el abanico en 0 desde 01 es un ciclo de tamaño tres ni saturado ni ajustado."""
    grafo = Grafo.desde_aristas(
        [(0, 1), (0, 2), (0, 4), (1, 3), (1, 5), (2, 3), (2, 6), (4, 5), (4, 6), (3, 7), (5, 7), (6, 7)]
    )
    return Coloracion.desde_mapa(
        grafo,
        4,
        {
            (0, 1): 1, (0, 2): 2, (0, 4): 3,
            (1, 3): 3, (1, 5): 4, (2, 3): 4, (2, 6): 1,
            (4, 5): 2, (4, 6): 4, (3, 7): 1, (5, 7): 3, (6, 7): 2,
        },
    )
