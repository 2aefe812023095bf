"""
Pacote de testes para o p2moduli.
"""
