"""
p2moduli - Invariantes exatos de espaços de moduli de feixes em P²

Álgebra de caracteres de Chern, fibrados excepcionais, resoluções de Gaeta,
paredes de Bridgeland, cones de divisores e verificação por álgebra linear
exata em configurações explícitas de pontos.
"""

__version__ = "0.2.0"
