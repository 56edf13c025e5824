"""
Servicios de dominio: poset GT, pipe dreams, MCOP, degeneraciones,
tablas, representaciones y la Grassmanniana semi-infinita.
"""
