"""
Módulo de logging centralizado para las ejecuciones de circortho.

Proporciona un registro simple de eventos de una ejecución (búsqueda,
verificación, clasificación...). Los eventos se guardan en memoria y se
muestran por stderr con un prefijo según su tipo, de modo que stdout queda
libre para tablas y catálogos.

Uso:
    from circortho.event_logger import RunLogger

    logger = RunLogger()
    logger.log("Iniciada búsqueda de orden 7")
    logger.log("Encontradas 2 soluciones", "success")

Dependencias:
    - datetime: Timestamps de los eventos
    - sys: Salida por stderr
"""
import sys
from datetime import datetime
from typing import Any, Dict, List, Optional, TextIO

# Prefijos de salida por tipo de evento
EVENT_PREFIXES: Dict[str, str] = {
    "info": "📊",
    "success": "✅",
    "warning": "⚠️ ",
    "error": "❌",
}


class RunLogger:
    """
    Logger de eventos de una ejecución.

    Tipos de eventos soportados:
        - "info": Información general
        - "success": Acción completada
        - "warning": Advertencia (resultado vacío, discrepancia)
        - "error": Error o fallo de verificación

    Attributes:
        verbose: Si es False los eventos se registran pero no se imprimen
        stream: Flujo de salida (default: sys.stderr)
        events: Lista de eventos registrados
    """

    def __init__(self, verbose: bool = True, stream: Optional[TextIO] = None):
        """
        Inicializa el logger.

        Args:
            verbose: Imprimir cada evento al registrarlo
            stream: Flujo de salida; None usa sys.stderr en el momento de escribir
        """
        self.verbose = verbose
        self.stream = stream
        self.events: List[Dict[str, Any]] = []

    def log(self, message: str, event_type: str = "info") -> None:
        """
        Registra un evento.

        Args:
            message: Mensaje descriptivo del evento
            event_type: Tipo de evento ("info", "success", "warning", "error")

        Example:
            >>> logger = RunLogger(verbose=False)
            >>> logger.log("Verificados 6 generadores", "success")
            >>> logger.get_logs()[0]["type"]
            'success'
        """
        event = {
            "timestamp": datetime.now().isoformat(),
            "message": message,
            "type": event_type,
        }
        self.events.append(event)
        if self.verbose:
            prefix = EVENT_PREFIXES.get(event_type, "")
            print(f"{prefix} {message}", file=self.stream or sys.stderr)

    def get_logs(self, limit: Optional[int] = None, event_type: Optional[str] = None) -> List[Dict[str, Any]]:
        """
        Recupera eventos con filtros opcionales, más recientes primero.

        Args:
            limit: Número máximo de eventos (None = todos)
            event_type: Filtrar por tipo de evento

        Returns:
            Lista de diccionarios {"timestamp", "message", "type"}
        """
        logs = self.events
        if event_type:
            logs = [log for log in logs if log.get("type") == event_type]
        logs = list(reversed(logs))
        if limit:
            logs = logs[:limit]
        return logs

    def clear_logs(self) -> None:
        """Elimina todos los eventos registrados."""
        self.events = []

    # Funciones helper de formato - Mensajes consistentes para eventos comunes

    @staticmethod
    def format_search_start(n: int, classes: int, workers: int) -> str:
        """Mensaje de inicio de búsqueda espectral."""
        return f"Iniciada búsqueda de orden {n}: {classes} clases espectrales, {workers} procesos"

    @staticmethod
    def format_search_done(n: int, solutions: int, distinct: int) -> str:
        """Mensaje de fin de búsqueda espectral."""
        return f"Búsqueda de orden {n} completada: {solutions} soluciones, {distinct} valores de d"

    @staticmethod
    def format_no_class(n: int, d: Any) -> str:
        """Mensaje cuando el d pedido no corresponde a ninguna clase espectral."""
        return f"Ninguna clase espectral de orden {n} tiene d² = {d.d_squared}"

    @staticmethod
    def format_verify_result(label: str, passes: bool, residual: float) -> str:
        """
        Mensaje de resultado de verificación.

        Example:
            >>> RunLogger.format_verify_result("n=7", True, 3e-6)
            'n=7: verificado (residuo máximo 3.000e-06)'
        """
        state = "verificado" if passes else "FALLA"
        return f"{label}: {state} (residuo máximo {residual:.3e})"

    @staticmethod
    def format_classify(n: int, d: str, status: str) -> str:
        """Mensaje de clasificación de un par (n, d)."""
        return f"Par (n={n}, d={d}): {status}"

    @staticmethod
    def format_discrepancy(expected: Any, computed: Any) -> str:
        """Mensaje de discrepancia entre una lista publicada y la recalculada."""
        return f"Discrepancia con la lista publicada: esperado {expected}, calculado {computed}"

    @staticmethod
    def format_records_written(count: int, path: str) -> str:
        """Mensaje de escritura de registros en el catálogo."""
        return f"Escritos {count} registros en {path}"
