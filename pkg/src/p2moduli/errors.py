#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Hierarquia de erros do p2moduli.

Todos os erros reportados pelas computações herdam de ModuliError, que por sua
vez herda de ValueError. A CLI captura ModuliError e converte em código de saída 1.
"""


class ModuliError(ValueError):
    """Erro base para qualquer falha reportada por uma computação."""


class FieldMismatchError(ModuliError):
    """Operandos pertencem a corpos diferentes (racional vs. primo)."""


class ShapeError(ModuliError):
    """Dimensões ou twists incompatíveis com a operação."""


class ZeroPointError(ModuliError):
    """Ponto projetivo (0, 0, 0)."""


class EqualSlopesError(ModuliError):
    """Caracteres com a mesma inclinação não determinam um ponto ortogonal."""


class TreeSearchExhausted(ModuliError):
    """A busca na árvore excepcional atingiu o limite de profundidade."""


class NotExceptionalError(ModuliError):
    """Inclinação que não pertence à árvore de inclinações excepcionais."""


class NegativeExponentError(ModuliError):
    """Um expoente de resolução calculado ficou negativo."""


class ConservationError(ModuliError):
    """A soma alternada das classes não reproduz a classe resolvida."""


class NotPureError(ModuliError):
    """n não é triangular nem tangencial."""


class UnsupportedTableError(ModuliError):
    """Não há tabela embutida para este n."""


class InfeasibleConfigError(ModuliError):
    """Especificação de configuração de pontos impossível."""


class UnknownDetectorError(ModuliError):
    """Identificador de detector desconhecido."""


class CertificateError(ModuliError):
    """Pré-condição de um certificado cohomológico não satisfeita."""


class ConfigError(ModuliError):
    """Configuração inválida."""
