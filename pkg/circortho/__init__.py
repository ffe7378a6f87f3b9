"""
circortho: matrices circulantes con filas ortogonales, diagonal constante y
entradas unimodulares fuera de la diagonal.

Paquetes y módulos:
    - core: racionales exactos, valores de diagonal y generadores
    - spectral: DFT, autovalores y verificación de condiciones
    - search: búsqueda espectral exhaustiva por patrones de signos
    - feasibility: filtros aritméticos, construcciones y caso cuaternario
    - ringzm: matrices circulantes sobre Z_m
    - mub: bases mutuamente no sesgadas
    - catalog / models / database: persistencia de resultados
    - commands: subcomandos de la línea de comandos
"""

__version__ = "0.1.0"
