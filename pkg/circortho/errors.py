"""
Excepciones de circortho.

Todas derivan de `CircOrthoError` y además de `ValueError`, de modo que el
código que ya captura `ValueError` (como hacía el resto del proyecto) sigue
funcionando. La línea de comandos traduce cada tipo a un código de salida.
"""
from typing import Optional


class CircOrthoError(ValueError):
    """Error base del paquete."""


class DomainError(CircOrthoError):
    """Precondición violada (orden fuera de rango, argumento negativo, etc.)."""


class StructureError(CircOrthoError):
    """Datos estructuralmente inconsistentes (n no coincide con el número de entradas)."""


class SearchLimitError(CircOrthoError):
    """Rechazo por límite de coste (orden demasiado grande para la enumeración)."""


class BasisRejectedError(CircOrthoError):
    """
    La matriz normalizada no es unitaria.

    Attributes:
        residual: Máxima desviación de la matriz de Gram respecto a la identidad
    """

    def __init__(self, message: str, residual: float):
        super().__init__(message)
        self.residual = residual


class UnbiasedPairError(CircOrthoError):
    """
    Un par de bases no es mutuamente no sesgado.

    Attributes:
        pair: Nombres de las dos bases, ej. ("F", "C")
        residual: Máxima desviación de |<φ|ψ>|² respecto a 1/n
    """

    def __init__(self, message: str, pair: tuple, residual: float):
        super().__init__(message)
        self.pair = pair
        self.residual = residual


class CatalogParseError(CircOrthoError):
    """
    Error de lectura de un catálogo o de un bloque de texto del apéndice.

    Attributes:
        line_number: Línea (1-based) donde se detectó el error, si se conoce
    """

    def __init__(self, message: str, line_number: Optional[int] = None):
        if line_number is not None:
            message = f"línea {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number
