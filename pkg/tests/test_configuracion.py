"""Pruebas de la configuración por variables de entorno y de los presupuestos."""

from __future__ import annotations

import pytest

from config.presupuestos import LimitesOraculo, PresupuestoBusqueda, presupuesto_por_defecto
from src.configuracion import limpiar_cache_configuracion, obtener_configuracion


def test_valores_por_defecto() -> None:
    configuracion = obtener_configuracion()
    assert configuracion.presupuesto() == presupuesto_por_defecto()
    assert configuracion.limites() == LimitesOraculo(max_aristas=12)
    assert configuracion.semilla == 0


def test_variables_de_entorno(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("KEMPE_MAX_ESTADOS", "500")
    monkeypatch.setenv("KEMPE_MAX_ARISTAS_ORACULO", "9")
    monkeypatch.setenv("KEMPE_SEMILLA", "42")
    limpiar_cache_configuracion()
    configuracion = obtener_configuracion()
    assert configuracion.presupuesto() == PresupuestoBusqueda(max_estados=500, max_profundidad=32)
    assert configuracion.limites().max_aristas == 9
    assert configuracion.semilla == 42
    assert obtener_configuracion() is configuracion


def test_presupuesto_negativo_se_lleva_a_cero() -> None:
    presupuesto = PresupuestoBusqueda(max_estados=-3, max_profundidad=5)
    assert presupuesto.max_estados == 0
    assert presupuesto.es_nulo
    assert not presupuesto_por_defecto().es_nulo
    assert LimitesOraculo(max_aristas=-1).max_aristas == 0
