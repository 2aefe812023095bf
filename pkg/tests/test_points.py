#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Testes das configurações de pontos, tabelas de Betti e detectores.
"""

import re

import numpy as np
import pytest

from p2moduli.errors import (
    InfeasibleConfigError,
    ShapeError,
    UnknownDetectorError,
    ZeroPointError,
)
from p2moduli.exactalg import HPoly, PolyMatrix, random_invertible
from p2moduli.gaeta import GradedShape, gaeta_exponents
from p2moduli.points import (
    PointConfig,
    apply_linear_change,
    auto_detectors,
    betti_table,
    dependent_twelve_matrix,
    detect_admissible,
    generate_config,
    hilbert_regularity,
    ideal_dim,
    ideal_handle_from_config,
    regularity,
    syzygy_matrix,
    zero_block_search,
)
from p2moduli.sbld_data import ROWS
from p2moduli.walls import sbld_table

COORDINATE = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
ON_LINE = ((1, 0, 0), (0, 1, 0), (1, 1, 0))


# -----------------------------------------------
# Configurações
# -----------------------------------------------

def test_config_rejects_bad_points(qq):
    """Testa ponto nulo, ponto repetido projetivamente e coordenadas faltando."""
    with pytest.raises(ZeroPointError):
        PointConfig(qq, ((0, 0, 0),))
    with pytest.raises(InfeasibleConfigError):
        PointConfig(qq, ((1, 2, 3), (2, 4, 6)))
    with pytest.raises(ShapeError):
        PointConfig(qq, ((1, 2),))


def test_load_seven_on_conic(seven_on_conic_path):
    """Testa a leitura da configuração distribuída."""
    cfg = PointConfig.load(seven_on_conic_path)
    assert cfg.length == 7
    assert cfg.label == "Q_6(7)"
    assert cfg.field.to_json() == "Q"


def test_generate_config_errors(gf):
    """Testa especificações impossíveis."""
    with pytest.raises(InfeasibleConfigError):
        generate_config("collinear", 3, k=4, fld=gf)
    with pytest.raises(InfeasibleConfigError):
        generate_config("on_quartic", 3, fld=gf)
    with pytest.raises(InfeasibleConfigError):
        generate_config("general", 0, fld=gf)
    with pytest.raises(InfeasibleConfigError):
        generate_config("hilbert_burch", 7, fld=gf)


def test_generate_config_is_deterministic(gf):
    """Testa que a mesma semente reproduz os mesmos pontos."""
    a = generate_config("on_conic", 6, seed=11, fld=gf, k=4)
    b = generate_config("on_conic", 6, seed=11, fld=gf, k=4)
    assert a.points == b.points
    assert a.label == "on_conic(4)"


# -----------------------------------------------
# Dimensões e tabelas de Betti
# -----------------------------------------------

def test_coordinate_points(qq):
    """Testa h⁰, regularidade e Betti dos três pontos coordenados."""
    z = PointConfig(qq, COORDINATE)
    assert ideal_dim(z, 1).h0 == 0
    assert ideal_dim(z, 2).h0 == 3
    assert ideal_dim(z, -1).h0 == 0
    assert hilbert_regularity(z) == 1
    assert regularity(z) == 2
    assert betti_table(z).shape() == GradedShape(((-3, 2),), ((-2, 3),))


def test_collinear_points(qq):
    """Testa a tabela G_1 de três pontos numa reta."""
    z = PointConfig(qq, ON_LINE)
    table = betti_table(z)
    assert table.beta1 == {1: 1, 3: 1}
    assert table.beta2 == {4: 1}
    assert sbld_table(3).betti_id(table.shape()) == "G_1"


@pytest.mark.parametrize(
    "n", [3, 4, 5, 6, 7, 8, pytest.param(12, marks=pytest.mark.slow)]
)
def test_general_points_have_gaeta_table(gf, n):
    """Testa que pontos gerais têm a resolução de Gaeta."""
    z = generate_config("general", n, seed=n, fld=gf)
    table = betti_table(z)
    assert table.shape() == gaeta_exponents(n).shape
    if n in (7, 8, 12):
        assert sbld_table(n).betti_id(table.shape()) == "G"


@pytest.mark.parametrize("n, label", [(4, "G_2"), (5, "G_2"), (7, "G_5")])
def test_collinear_family(gf, n, label):
    """Testa n pontos colineares: interseção completa da reta com uma curva de grau n."""
    z = generate_config("collinear", n, seed=3, fld=gf)
    assert sbld_table(n).betti_id(betti_table(z).shape()) == label


def test_six_on_conic(gf):
    """Testa seis pontos numa cônica: O(−5) → O(−3) ⊕ O(−2)."""
    z = generate_config("on_conic", 6, seed=5, fld=gf)
    assert sbld_table(6).betti_id(betti_table(z).shape()) == "G_1"


def _special_rows():
    """Linhas L_k(n), Q_k(n) e C_k(n) das tabelas embutidas, com o rótulo de Betti esperado."""
    curves = {"L": "collinear", "Q": "on_conic", "C": "on_cubic"}
    cases = []
    for n, rows in sorted(ROWS.items()):
        for row in rows:
            match = re.fullmatch(r"([LQC])_(\d+)\((\d+)\)", row.geometry)
            if match is None:
                continue
            spec, k = curves[match.group(1)], int(match.group(2))
            marks = [pytest.mark.slow] if n >= 12 else []
            cases.append(pytest.param(n, spec, k, row.betti, id=row.geometry, marks=marks))
    return cases


@pytest.mark.parametrize("n, spec, k, label", _special_rows())
def test_special_configurations_match_table(gf, n, spec, k, label):
    """Testa que o membro geral de cada estrato especial tem a tabela de Betti da linha."""
    z = generate_config(spec, n, seed=20 + k, fld=gf, k=k)
    assert sbld_table(n).betti_id(betti_table(z).shape()) == label


def test_four_collinear_of_seven(gf):
    """Testa que 4 pontos colineares entre 7 dão G_1 = O(−5) ⊕ O(−4)² → O(−4) ⊕ O(−3)³."""
    z = generate_config("collinear", 7, seed=4, fld=gf, k=4)
    table = betti_table(z)
    assert table.beta1 == {3: 3, 4: 1}
    assert table.beta2 == {4: 2, 5: 1}
    assert sbld_table(7).betti_id(table.shape()) == "G_1"
    assert auto_detectors(syzygy_matrix(z, table)) == []


@pytest.mark.parametrize("seed", range(20))
def test_betti_table_is_projectively_invariant(gf, seed):
    """Testa a invariância da tabela e dos veredictos por 20 mudanças de coordenadas."""
    z = generate_config("on_conic", 7, seed=2, fld=gf, k=6)
    moved = apply_linear_change(z, random_invertible(gf, 3, np.random.default_rng(seed)))
    assert betti_table(moved).to_json() == betti_table(z).to_json()
    pm, moved_pm = syzygy_matrix(z), syzygy_matrix(moved)
    for detector in ("n7_T", "n7_I1"):
        assert (
            detect_admissible(moved_pm, detector).verdict()
            == detect_admissible(pm, detector).verdict()
        )
    assert detect_admissible(moved_pm, "n7_I1").admissible


def test_conic_file_betti(seven_on_conic_path):
    """Testa que Q_6(7) ainda tem a tabela geral G."""
    z = PointConfig.load(seven_on_conic_path)
    assert sbld_table(7).betti_id(betti_table(z).shape()) == "G"


# -----------------------------------------------
# Sizígias e Hilbert-Burch
# -----------------------------------------------

def test_syzygy_matrix_regenerates_ideal(qq):
    """Testa que os menores da matriz de sizígias geram I_Z."""
    z = PointConfig(qq, COORDINATE)
    pm = syzygy_matrix(z)
    assert sorted(pm.row_twists) == [2, 2, 2]
    assert sorted(pm.col_twists) == [3, 3]
    handle = ideal_handle_from_config(z)
    assert handle.length == 3
    for m in range(4):
        assert ideal_dim(handle, m) == ideal_dim(z, m)


def test_hilbert_burch_divisorial_twelve(gf):
    """Testa a tabela G_1 de um ideal de Hilbert-Burch aleatório com n = 12."""
    z = generate_config("hilbert_burch", 12, seed=0, fld=gf)
    assert z.length == 12
    table = betti_table(z)
    assert sbld_table(12).betti_id(table.shape()) == "G_1"
    pm = syzygy_matrix(z, table)
    assert auto_detectors(pm) == ["n12_T", "n12_I1", "n12_I7"]
    assert detect_admissible(pm, "n12_T").admissible


# -----------------------------------------------
# Detectores
# -----------------------------------------------

def _degenerate_seven(qq) -> PolyMatrix:
    x, y, z = HPoly.variables(qq)
    return PolyMatrix.build(
        qq,
        [3, 3, 3],
        [4, 5],
        [[x, x * x], [y, y * y], [None, z * z]],
    )


def test_seven_general_is_tangent_admissible(gf):
    """Testa que 7 pontos gerais são T(−4)-admissíveis."""
    pm = syzygy_matrix(generate_config("general", 7, seed=7, fld=gf))
    assert auto_detectors(pm) == ["n7_T", "n7_I1"]
    detection = detect_admissible(pm, "n7_T")
    assert detection.admissible
    assert detection.witness["rank"] == 3
    assert not detect_admissible(pm, "n7_I1").admissible


def test_seven_on_conic_is_point_admissible(seven_on_conic_path):
    """Testa que Q_6(7) é I_1(−2)-admissível e não T(−4)-admissível."""
    pm = syzygy_matrix(PointConfig.load(seven_on_conic_path))
    assert detect_admissible(pm, "n7_I1").admissible
    assert detect_admissible(pm, "n7_T").verdict() == "not T(-4)-admissible"


def test_rank_detectors_on_explicit_matrix(qq):
    """Testa os detectores de posto numa matriz montada à mão."""
    pm = _degenerate_seven(qq)
    detection = detect_admissible(pm, "n7_I1")
    assert detection.admissible
    assert detection.witness["rank"] == 2
    assert detection.verdict() == "I_1(-2)-admissible"


def test_four_collinear_of_eight_is_line_admissible(gf):
    """Testa L_4(8): a linha do gerador quártico tem entradas múltiplas da reta, posto 1."""
    z = generate_config("collinear", 8, seed=8, fld=gf, k=4)
    pm = syzygy_matrix(z)
    assert auto_detectors(pm) == ["n8_I4"]
    detection = detect_admissible(pm, "n8_I4")
    assert detection.admissible
    assert detection.witness["rank"] == 1
    assert detection.verdict() == "I_4(-1)-admissible"


def test_general_eight_is_not_line_admissible(gf):
    """Testa que 8 pontos gerais não são I_4(−1)-admissíveis."""
    pm = syzygy_matrix(generate_config("general", 8, seed=8, fld=gf))
    detection = detect_admissible(pm, "n8_I4")
    assert not detection.admissible
    assert detection.witness["rank"] == 2


@pytest.mark.parametrize(
    "dependent, detector, target",
    [("l1_l3", "n12_I1", "I_1(-3)"), ("l4_l5", "n12_I7", "I_7(-1)")],
)
def test_twelve_dependent_forms(gf, dependent, detector, target):
    """Testa que formas lineares dependentes numa matriz G_1 de n = 12 dão o objeto esperado."""
    pm = dependent_twelve_matrix(gf, dependent, seed=12)
    z = generate_config("hilbert_burch", 12, fld=gf, matrix=pm)
    assert z.length == 12
    table = betti_table(z)
    assert sbld_table(12).betti_id(table.shape()) == "G_1"
    pm = syzygy_matrix(z, table)
    detection = detect_admissible(pm, detector)
    assert detection.admissible
    assert detection.target == target
    assert detection.witness[f"rank_{dependent}"] == (2 if dependent == "l1_l3" else 1)
    assert not detect_admissible(pm, "n12_T").admissible
    others = {"n12_I1", "n12_I7"} - {detector}
    assert not any(detect_admissible(pm, name).admissible for name in others)


def test_zero_block_search(qq):
    """Testa a busca de bloco nulo e o detector genérico."""
    pm = _degenerate_seven(qq)
    sub = GradedShape(((-4, 1),), ((-3, 2),))
    assert zero_block_search(pm, sub) == {"rows": [0, 1], "cols": [0]}
    detection = detect_admissible(pm, "zero_block", sub=sub, target="I_1(-2)")
    assert detection.admissible
    assert zero_block_search(pm, GradedShape(((-5, 1),), ((-3, 2),))) is None


def test_detector_errors(qq):
    """Testa detector desconhecido, twists errados e forma ausente."""
    pm = _degenerate_seven(qq)
    with pytest.raises(UnknownDetectorError):
        detect_admissible(pm, "n9_X")
    with pytest.raises(ShapeError):
        detect_admissible(pm, "n8_I4")
    with pytest.raises(ShapeError):
        detect_admissible(pm, "zero_block")
    with pytest.raises(ShapeError):
        zero_block_search(pm, GradedShape(((-4, 4),), ((-3, 5),)))


def test_dependent_twelve_matrix_rejects_unknown(gf):
    """Testa dependência fora de l1_l3 e l4_l5."""
    with pytest.raises(ShapeError):
        dependent_twelve_matrix(gf, "l2_l4")
