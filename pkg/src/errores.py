"""Excepciones del motor de Kempe.

Cada error lleva un `codigo` corto, un `detalle` técnico y una `explicacion_simple` en lenguaje
cotidiano, el mismo trío que usan los mensajes de la CLI al reportar fallos.
"""

from __future__ import annotations


class ErrorMotorKempe(Exception):
    """Raíz de los errores propios del motor."""

    codigo: str = "ERROR_MOTOR"
    explicacion_simple: str = "El motor de Kempe no pudo completar la operación."

    def __init__(self, detalle: str, *, codigo: str | None = None) -> None:
        super().__init__(detalle)
        self.detalle = detalle
        if codigo is not None:
            self.codigo = codigo

    def como_mensaje(self) -> dict[str, str]:
        """Devuelve el error como diccionario apto para imprimir o serializar."""
        return {
            "codigo": self.codigo,
            "detalle": self.detalle,
            "explicacion_simple": self.explicacion_simple,
        }


class ErrorFormato(ErrorMotorKempe, ValueError):
    """Entrada mal formada: líneas ilegibles, lazos, aristas repetidas o colores inválidos."""

    codigo = "FORMATO_INVALIDO"
    explicacion_simple = "Revisa el archivo o los valores entregados; alguno no respeta el formato."


class ErrorRegimen(ErrorMotorKempe, ValueError):
    """Operación de abanicos fuera del régimen de un único color faltante por vértice."""

    codigo = "REGIMEN_INVALIDO"
    explicacion_simple = (
        "Los abanicos sólo están definidos cuando cada vértice tiene exactamente un color faltante."
    )


class ErrorCadenaObsoleta(ErrorMotorKempe, ValueError):
    """La cadena o el registro no corresponde a la coloración vigente."""

    codigo = "CADENA_OBSOLETA"
    explicacion_simple = "La traza no encaja con la coloración sobre la que se intenta aplicar."


class ErrorPresupuestoAgotado(ErrorMotorKempe, RuntimeError):
    """La búsqueda acotada agotó estados o profundidad sin alcanzar la meta."""

    codigo = "PRESUPUESTO_AGOTADO"
    explicacion_simple = "La búsqueda se detuvo por límite de recursos; no se entregó ningún resultado parcial."


class ErrorLimiteOraculo(ErrorMotorKempe, ValueError):
    """El grafo excede la guarda de tamaño del oráculo exhaustivo."""

    codigo = "LIMITE_ORACULO"
    explicacion_simple = "El grafo es demasiado grande para enumerar todas sus coloraciones."


__all__ = [
    "ErrorMotorKempe",
    "ErrorFormato",
    "ErrorRegimen",
    "ErrorCadenaObsoleta",
    "ErrorPresupuestoAgotado",
    "ErrorLimiteOraculo",
]
