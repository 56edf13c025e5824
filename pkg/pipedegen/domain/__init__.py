"""
PipeDegen – Domain Layer
========================
Núcleo matemático en aritmética exacta.

- value_objects/: objetos inmutables (OCPartition, Weight, OrderIdeal, Tableau, …)
- services/: algoritmos puros (poset GT, pipe dreams, MCOP, núcleos tóricos, …)
- exceptions/: jerarquía DomainError

REGLA DE DEPENDENCIA:
Este módulo NO importa de application/, infrastructure/ ni presentation/.
"""
