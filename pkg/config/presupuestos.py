"""Definiciones de presupuestos para las búsquedas acotadas y el oráculo exhaustivo."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class PresupuestoBusqueda:
    """Agrupa los límites de una búsqueda en anchura sobre intercambios de Kempe.

    Esta clase asegura que los límites se mantengan en rangos razonables: valores negativos se
    llevan a cero, lo que equivale a no permitir ningún paso de búsqueda.
    """

    max_estados: int = field(default=1_000_000)
    max_profundidad: int = field(default=32)

    def __post_init__(self) -> None:
        """Normaliza los límites tras la inicialización del dataclass (estructura de datos ligera)."""
        object.__setattr__(self, "max_estados", max(int(self.max_estados), 0))
        object.__setattr__(self, "max_profundidad", max(int(self.max_profundidad), 0))

    @property
    def es_nulo(self) -> bool:
        """Indica si el presupuesto no permite explorar ningún intercambio."""
        return self.max_estados == 0 or self.max_profundidad == 0


@dataclass(frozen=True)
class LimitesOraculo:
    """Guarda de tamaño del oráculo: más aristas vuelven inviable la enumeración completa."""

    max_aristas: int = field(default=12)

    def __post_init__(self) -> None:
        object.__setattr__(self, "max_aristas", max(int(self.max_aristas), 0))


def presupuesto_por_defecto() -> PresupuestoBusqueda:
    """Entrega el presupuesto estándar: 10⁶ coloraciones visitadas y profundidad 32."""
    return PresupuestoBusqueda()


def limites_por_defecto() -> LimitesOraculo:
    """Entrega la guarda estándar del oráculo (12 aristas)."""
    return LimitesOraculo()
