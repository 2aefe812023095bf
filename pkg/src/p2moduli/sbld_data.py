#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tabelas de decomposição em lugares de base estáveis embutidas.

Dados transcritos como constantes estruturadas para n ∈ {3, 4, 5, 6, 7, 8, 12}:
- BETTI: tabelas de Betti G, G_1, ... como (fontes, alvos) com twists negativos
- ROWS: linhas (geometria, sizígias, fibrado interpolador, lugar de base, μ)
- WALLS: paredes de Bridgeland (centro, objetos desestabilizadores)

Nada aqui é calculado; p2moduli.walls refaz todas as verificações.
"""

from typing import Dict, NamedTuple, Tuple

Terms = Tuple[Tuple[int, int], ...]


class RowSpec(NamedTuple):
    geometry: str
    betti: str
    destab: str
    interp_name: str
    sources: Terms
    targets: Terms
    base_locus: Tuple[str, ...]
    mu: str
    dashed: bool = False
    note: str = ""


class WallSpec(NamedTuple):
    center: str
    destabs: Tuple[str, ...]


SUPPORTED = (3, 4, 5, 6, 7, 8, 12)

BETTI: Dict[int, Dict[str, Tuple[Terms, Terms]]] = {
    3: {
        "G": (((-3, 2),), ((-2, 3),)),
        "G_1": (((-4, 1),), ((-3, 1), (-1, 1))),
    },
    4: {
        "G": (((-4, 1),), ((-2, 2),)),
        "G_1": (((-4, 1), (-3, 1)), ((-3, 1), (-2, 2))),
        "G_2": (((-5, 1),), ((-4, 1), (-1, 1))),
    },
    5: {
        "G": (((-4, 2),), ((-3, 2), (-2, 1))),
        "G_1": (((-5, 1), (-3, 1)), ((-4, 1), (-2, 2))),
        "G_2": (((-6, 1),), ((-5, 1), (-1, 1))),
    },
    6: {
        "G": (((-4, 3),), ((-3, 4),)),
        "G_1": (((-5, 1),), ((-3, 1), (-2, 1))),
        "G_2": (((-5, 1), (-4, 1)), ((-4, 1), (-3, 1), (-2, 1))),
        "G_3": (((-6, 1), (-3, 1)), ((-5, 1), (-2, 2))),
        "G_4": (((-7, 1),), ((-6, 1), (-1, 1))),
    },
    7: {
        "G": (((-5, 1), (-4, 1)), ((-3, 3),)),
        "G_1": (((-5, 1), (-4, 2)), ((-4, 1), (-3, 3))),
        "G_2": (((-5, 2),), ((-4, 2), (-2, 1))),
        "G_3": (((-6, 1), (-4, 1)), ((-5, 1), (-3, 1), (-2, 1))),
        "G_4": (((-7, 1), (-3, 1)), ((-6, 1), (-2, 2))),
        "G_5": (((-8, 1),), ((-7, 1), (-1, 1))),
    },
    8: {
        "G": (((-5, 2),), ((-4, 1), (-3, 2))),
        "G_1": (((-5, 2), (-4, 1)), ((-4, 2), (-3, 2))),
        "G_2": (((-6, 1), (-4, 2)), ((-5, 1), (-3, 3))),
        "G_3": (((-6, 1),), ((-4, 1), (-2, 1))),
        "G_4": (((-6, 1), (-5, 1)), ((-5, 1), (-4, 1), (-2, 1))),
        "G_5": (((-7, 1), (-4, 1)), ((-6, 1), (-3, 1), (-2, 1))),
        "G_6": (((-8, 1), (-3, 1)), ((-7, 1), (-2, 2))),
        "G_7": (((-9, 1),), ((-8, 1), (-1, 1))),
    },
    12: {
        "G": (((-6, 2),), ((-4, 3),)),
        "G_1": (((-6, 2), (-5, 1)), ((-5, 1), (-4, 3))),
        "G_2": (((-6, 3),), ((-5, 3), (-3, 1))),
        "G_3": (((-6, 2), (-5, 2)), ((-5, 2), (-4, 3))),
        "G_4": (((-7, 1), (-5, 1)), ((-5, 1), (-4, 1), (-3, 1))),
        "G_5": (((-7, 1), (-5, 3)), ((-6, 1), (-4, 4))),
        "G_6": (((-7, 2), (-4, 1)), ((-6, 2), (-3, 2))),
        "G_7": (((-8, 1),), ((-6, 1), (-2, 1))),
        "G_8": (((-8, 1), (-5, 2)), ((-7, 1), (-4, 2), (-3, 1))),
        "G_9": (((-9, 1), (-5, 1)), ((-8, 1), (-3, 2))),
        "G_10": (((-10, 1), (-4, 2)), ((-9, 1), (-3, 3))),
        "G_11": (((-11, 1), (-4, 1)), ((-10, 1), (-3, 1), (-2, 1))),
        "G_12": (((-12, 1), (-3, 1)), ((-11, 1), (-2, 2))),
        "G_13": (((-13, 1),), ((-12, 1), (-1, 1))),
    },
}

ROWS: Dict[int, Tuple[RowSpec, ...]] = {
    3: (
        # n=3, linha 1: O(1), Bs = U^c = L_3(3)
        RowSpec("Gaeta general", "G", "O(-2)", "O(1)", (), ((1, 1),), ("L_3(3)",), "1"),
        # n=3, linha 2: M_1 = coker(O(−1)^4 → O^6)
        RowSpec("L_3(3)", "G_1", "O(-1)", "M_1", ((-1, 4),), ((0, 6),), (), "2"),
    ),
    4: (
        # n=4, linha 1: T = coker(O → O(1)^3)
        RowSpec("Gaeta general", "G", "O(-2)", "T", ((0, 1),), ((1, 3),), ("L_3(4)",), "3/2"),
        # n=4, linha 2: M_1 = coker(O(−1)^2 → O^2 ⊕ O(1)^2)
        RowSpec("L_3(4)", "G_1", "I_1(-1)", "M_1", ((-1, 2),), ((0, 2), (1, 2)), ("L_4(4)",), "2"),
        # n=4, linha 3: M_2 = coker(O(−1)^6 → O^8)
        RowSpec("L_4(4)", "G_2", "O(-1)", "M_2", ((-1, 6),), ((0, 8),), (), "3"),
    ),
    5: (
        # n=5, linha 1: M = coker(O^2 → O(1)^4)
        RowSpec("Gaeta general", "G", "O(-2)", "M", ((0, 2),), ((1, 4),), ("L_4(5)",), "2"),
        # n=5, linha 2: M_1 = coker(O(−1)^4 → O^4 ⊕ O(1)^2)
        RowSpec("L_4(5)", "G_1", "I_1(-1)", "M_1", ((-1, 4),), ((0, 4), (1, 2)), ("L_5(5)",), "3"),
        # n=5, linha 3: M_2 = coker(O(−1)^8 → O^10)
        RowSpec("L_5(5)", "G_2", "O(-1)", "M_2", ((-1, 8),), ((0, 10),), (), "4"),
    ),
    6: (
        # n=6, linha 1: O(2), Bs = U^c = Q_6(6)
        RowSpec("Gaeta general", "G", "O(-3)", "O(2)", (), ((2, 1),), ("Q_6(6)",), "2"),
        # n=6, linha 2: coker(O^3 → O(1)^5)
        RowSpec("Q_6(6)", "G_1", "O(-2)", "M_1", ((0, 3),), ((1, 5),), ("L_4(6)",), "5/2"),
        # n=6, linha 3: coker(O(−1)^2 → O(1)^4)
        RowSpec("L_4(6)", "G_2", "I_2(-1)", "M_2", ((-1, 2),), ((1, 4),), ("L_5(6)",), "3"),
        # n=6, linha 4: coker(O(−1)^6 → O^6 ⊕ O(1)^2)
        RowSpec("L_5(6)", "G_3", "I_1(-1)", "M_3", ((-1, 6),), ((0, 6), (1, 2)), ("L_6(6)",), "4"),
        # n=6, linha 5: coker(O(−1)^10 → O^12)
        RowSpec("L_6(6)", "G_4", "O(-1)", "M_4", ((-1, 10),), ((0, 12),), (), "5"),
    ),
    7: (
        # n=7, linha 1: E_{12/5}, guardado pela resolução O → O(2)^6
        RowSpec(
            "Gaeta general", "G", "T(-4)", "E_{12/5}", ((0, 1),), ((2, 6),), ("Q_6(7)",), "12/5",
            note="E_{12/5} representado por coker(O → O(2)^6)",
        ),
        # n=7, linha 2: M_1 = coker(O → O(1) ⊕ O(2)^2)
        RowSpec(
            "Q_6(7)", "G", "I_1(-2)", "M_1", ((0, 1),), ((1, 1), (2, 2)), ("L_4(7)", "Q_7(7)"), "5/2",
        ),
        # n=7, linha 3: M_2 = coker(O^6 → O(1)^9)
        RowSpec("L_4(7)", "G_1", "I_3(-1)", "M_2", ((0, 6),), ((1, 9),), ("L_5(7)",), "3"),
        # n=7, linha 3 (tracejada): mesmo M_2
        RowSpec(
            "Q_7(7)", "G_2", "O(-2)", "M_2", ((0, 6),), ((1, 9),), ("L_5(7)",), "3", dashed=True,
        ),
        # n=7, linha 4: coker(O(−1)^4 → O^2 ⊕ O(1)^4)
        RowSpec("L_5(7)", "G_3", "I_2(-1)", "M_3", ((-1, 4),), ((0, 2), (1, 4)), ("L_6(7)",), "4"),
        # n=7, linha 5: coker(O(−1)^8 → O^8 ⊕ O(1)^2)
        RowSpec("L_6(7)", "G_4", "I_1(-1)", "M_4", ((-1, 8),), ((0, 8), (1, 2)), ("L_7(7)",), "5"),
        # n=7, linha 6: coker(O(−1)^12 → O^14)
        RowSpec("L_7(7)", "G_5", "O(-1)", "M_5", ((-1, 12),), ((0, 14),), (), "6"),
    ),
    8: (
        # n=8, linha 1: M = coker(O(1)^2 → O(2)^5)
        RowSpec(
            "Gaeta general", "G", "O(-3)^3", "M", ((1, 2),), ((2, 5),), ("L_4(8)", "Q_7(8)"), "8/3",
        ),
        # n=8, linha 2: M_1 = coker(O^2 → O(1)^2 ⊕ O(2)^2)
        RowSpec(
            "L_4(8)", "G", "I_4(-1)", "M_1", ((0, 2),), ((1, 2), (2, 2)), ("L_5(8)", "Q_8(8)"), "3",
        ),
        # n=8, linha 2 (tracejada): mesmo M_1
        RowSpec(
            "Q_7(8)", "G_1", "I_1(-2)", "M_1", ((0, 2),), ((1, 2), (2, 2)), ("L_5(8)", "Q_8(8)"), "3",
            dashed=True,
        ),
        # n=8, linha 3: coker(O^10 → O(1)^14)
        RowSpec("Q_8(8)", "G_3", "O(-2)", "M_2", ((0, 10),), ((1, 14),), ("L_5(8)",), "7/2"),
        # n=8, linha 4: a tabela imprime coker(O(−1) → O ⊕ O(1)^3), de inclinação 4/3
        RowSpec(
            "L_5(8)", "G_2", "I_3(-1)", "M_3", ((-1, 1), (0, 1)), ((1, 3),), ("L_6(8)",), "4",
            note="resolução corrigida para coker(O(−1) ⊕ O → O(1)^3), a única com μ = 4 e χ = 0",
        ),
        # n=8, linha 5: coker(O(−1)^6 → O^4 ⊕ O(1)^4)
        RowSpec("L_6(8)", "G_5", "I_2(-1)", "M_4", ((-1, 6),), ((0, 4), (1, 4)), ("L_7(8)",), "5"),
        # n=8, linha 6: coker(O(−1)^10 → O^10 ⊕ O(1)^2)
        RowSpec("L_7(8)", "G_6", "I_1(-1)", "M_5", ((-1, 10),), ((0, 10), (1, 2)), ("L_8(8)",), "6"),
        # n=8, linha 7: coker(O(−1)^14 → O^16)
        RowSpec("L_8(8)", "G_7", "O(-1)", "M_6", ((-1, 14),), ((0, 16),), (), "7"),
    ),
    12: (
        # n=12, linha 1: T(2) = coker(O(2) → O(3)^3)
        RowSpec("Gaeta general", "G", "O(-4)^3", "T(2)", ((2, 1),), ((3, 3),), ("G_1",), "7/2"),
        # n=12, linha 2: célula de geometria vazia na tabela
        RowSpec(
            "D_Betti general", "G_1", "T(-5)", "M_1", ((1, 2),), ((3, 9),), ("C_11(12)",), "25/7",
            note="geometria em branco na tabela; é o divisor D_Betti",
        ),
        # n=12, linha 3: coker(O(1)^2 → O(2)^2 ⊕ O(3)^3)
        RowSpec(
            "C_11(12)", "G_1", "I_1(-3)", "M_2", ((1, 2),), ((2, 2), (3, 3)),
            ("L_5(12)", "Q_9(12)", "C_12(12)"), "11/3",
        ),
        # n=12, linha 4 e sub-linhas tracejadas: coker(O(1)^4 → O(2)^6)
        RowSpec("C_12(12)", "G_2", "O(-3)", "M_3", ((1, 4),), ((2, 6),), ("Q_10(12)",), "4"),
        RowSpec(
            "Q_9(12)", "G_3", "I_3(-2)", "M_3", ((1, 4),), ((2, 6),), ("Q_10(12)",), "4", dashed=True,
        ),
        RowSpec(
            "L_5(12)", "G_1", "I_7(-1)", "M_3", ((1, 4),), ((2, 6),), ("Q_10(12)",), "4", dashed=True,
        ),
        # n=12, linha 5: coker(O^3 → O(1) ⊕ O(2)^4)
        RowSpec(
            "Q_10(12)", "G_4", "I_2(-2)", "M_4", ((0, 3),), ((1, 1), (2, 4)),
            ("L_6(12)", "Q_11(12)"), "9/2",
        ),
        # n=12, linha 6 e sub-linha tracejada: coker(O^6 → O(1)^6 ⊕ O(2)^2)
        RowSpec("L_6(12)", "G_5", "I_6(-1)", "M_5", ((0, 6),), ((1, 6), (2, 2)), ("Q_12(12)",), "5"),
        RowSpec(
            "Q_11(12)", "G_6", "I_1(-2)", "M_5", ((0, 6),), ((1, 6), (2, 2)), ("Q_12(12)",), "5",
            dashed=True,
        ),
        # n=12, linha 7: coker(O^9 → O(1)^11)
        RowSpec("Q_12(12)", "G_7", "O(-2)", "M_6", ((0, 9),), ((1, 11),), ("L_7(12)",), "11/2"),
        # n=12, linha 8: coker(O(−1)^2 ⊕ O^6 → O(1)^10)
        RowSpec("L_7(12)", "G_8", "I_5(-1)", "M_7", ((-1, 2), (0, 6)), ((1, 10),), ("L_8(12)",), "6"),
        # n=12, linha 9: coker(O(−1)^6 → O(1)^8)
        RowSpec("L_8(12)", "G_9", "I_4(-1)", "M_8", ((-1, 6),), ((1, 8),), ("L_9(12)",), "7"),
        # n=12, linha 10: coker(O(−1)^10 → O^6 ⊕ O(1)^6)
        RowSpec("L_9(12)", "G_10", "I_3(-1)", "M_9", ((-1, 10),), ((0, 6), (1, 6)), ("L_10(12)",), "8"),
        # n=12, linha 11: coker(O(−1)^14 → O^12 ⊕ O(1)^4)
        RowSpec(
            "L_10(12)", "G_11", "I_2(-1)", "M_10", ((-1, 14),), ((0, 12), (1, 4)), ("L_11(12)",), "9",
        ),
        # n=12, linha 12: coker(O(−1)^18 → O^18 ⊕ O(1)^2)
        RowSpec(
            "L_11(12)", "G_12", "I_1(-1)", "M_11", ((-1, 18),), ((0, 18), (1, 2)), ("L_12(12)",), "10",
        ),
        # n=12, linha 13: coker(O(−1)^22 → O^24)
        RowSpec("L_12(12)", "G_13", "O(-1)", "M_12", ((-1, 22),), ((0, 24),), (), "11"),
    ),
}

WALLS: Dict[int, Tuple[WallSpec, ...]] = {
    3: (
        WallSpec("-5/2", ("O(-2)^3", "I_1(-1)", "T(-3)")),
        WallSpec("-7/2", ("O(-1)",)),
    ),
    4: (
        WallSpec("-3", ("O(-2)^2",)),
        WallSpec("-7/2", ("I_1(-1)",)),
        WallSpec("-9/2", ("O(-1)",)),
    ),
    5: (
        WallSpec("-7/2", ("O(-2)", "I_2(-1)")),
        WallSpec("-9/2", ("I_1(-1)",)),
        WallSpec("-11/2", ("O(-1)",)),
    ),
    6: (
        WallSpec("-7/2", ("O(-3)^4", "I_1(-2)", "I_3(-1)", "T(-4)")),
        WallSpec("-4", ("O(-2)",)),
        WallSpec("-9/2", ("I_2(-1)",)),
        WallSpec("-11/2", ("I_1(-1)",)),
        WallSpec("-13/2", ("O(-1)",)),
    ),
    7: (
        WallSpec("-39/10", ("T(-4)",)),
        WallSpec("-4", ("I_1(-2)",)),
        WallSpec("-9/2", ("I_3(-1)", "O(-2)")),
        WallSpec("-11/2", ("I_2(-1)",)),
        WallSpec("-13/2", ("I_1(-1)",)),
        WallSpec("-15/2", ("O(-1)",)),
    ),
    8: (
        WallSpec("-25/6", ("O(-3)^2",)),
        WallSpec("-9/2", ("I_4(-1)", "I_1(-2)")),
        WallSpec("-5", ("O(-2)",)),
        WallSpec("-11/2", ("I_3(-1)",)),
        WallSpec("-13/2", ("I_2(-1)",)),
        WallSpec("-15/2", ("I_1(-1)",)),
        WallSpec("-17/2", ("O(-1)",)),
    ),
    12: (
        # a lista impressa traz O(−3)^3, cujo centro é −11/2; O(−4)^3 é o objeto da linha 1
        WallSpec("-5", ("O(-4)^3", "(2,-3,3/2)", "I_4(-2)")),
        WallSpec("-71/14", ("T(-5)",)),
        WallSpec("-31/6", ("I_1(-3)",)),
        WallSpec("-11/2", ("O(-3)", "I_3(-2)", "I_7(-1)")),
        WallSpec("-6", ("I_2(-2)",)),
        WallSpec("-13/2", ("I_1(-2)", "I_6(-1)")),
        WallSpec("-7", ("O(-2)",)),
        WallSpec("-15/2", ("I_5(-1)",)),
        WallSpec("-17/2", ("I_4(-1)",)),
        WallSpec("-19/2", ("I_3(-1)",)),
        WallSpec("-21/2", ("I_2(-1)",)),
        WallSpec("-23/2", ("I_1(-1)",)),
        WallSpec("-25/2", ("O(-1)",)),
    ),
}
