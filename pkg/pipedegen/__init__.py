"""
PipeDegen – degeneraciones tóricas de variedades bandera
=========================================================
Pipe dreams, politopos MCOP, degeneraciones de Gröbner/sagbi, tablas
(O,C)-semiestándar, bases monomiales PBW y la Grassmanniana semi-infinita,
todo en aritmética exacta.
"""

__version__ = "1.0.0"
