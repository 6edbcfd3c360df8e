"""Configuración del motor usando pydantic-settings (extensión que carga variables desde entorno y archivos)."""

from __future__ import annotations

from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from config.presupuestos import LimitesOraculo, PresupuestoBusqueda


class ConfiguracionMotor(BaseSettings):
    """Aglutina los valores por defecto de presupuestos, guardas y semilla en un objeto centralizado.

    Ninguna variable es obligatoria; las banderas de la línea de comandos siempre prevalecen.
    """

    model_config = SettingsConfigDict(
        env_file=".env",
        env_prefix="KEMPE_",
        extra="ignore",
    )

    max_estados: int = Field(
        default=1_000_000,
        ge=0,
        description="Cantidad máxima de coloraciones visitadas por una búsqueda acotada.",
    )
    max_profundidad: int = Field(
        default=32,
        ge=0,
        description="Longitud máxima de las trazas exploradas por una búsqueda acotada.",
    )
    max_aristas_oraculo: int = Field(
        default=12,
        ge=0,
        description="Guarda de tamaño para la enumeración exhaustiva de coloraciones.",
    )
    semilla: int = Field(
        default=0,
        description="Semilla por defecto para toda funcionalidad aleatorizada.",
    )

    def presupuesto(self) -> PresupuestoBusqueda:
        """Construye el presupuesto de búsqueda a partir de la configuración."""
        return PresupuestoBusqueda(max_estados=self.max_estados, max_profundidad=self.max_profundidad)

    def limites(self) -> LimitesOraculo:
        """Construye la guarda del oráculo a partir de la configuración."""
        return LimitesOraculo(max_aristas=self.max_aristas_oraculo)


@lru_cache(maxsize=1)
def obtener_configuracion() -> ConfiguracionMotor:
    """Devuelve una instancia única de la configuración compartida."""
    return ConfiguracionMotor()


def limpiar_cache_configuracion() -> None:
    """Permite limpiar la memoria caché, útil en pruebas automatizadas."""
    obtener_configuracion.cache_clear()
