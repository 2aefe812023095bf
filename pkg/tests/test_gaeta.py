#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Testes das resoluções de Gaeta, das tabelas divisoriais e dos blocos do cone.
"""

from fractions import Fraction

import pytest

from p2moduli.chern import LogChern, ideal_points, tangent
from p2moduli.errors import (
    ConservationError,
    NegativeExponentError,
    NotPureError,
    ShapeError,
)
from p2moduli.gaeta import (
    GradedShape,
    beilinson_shape,
    classify_pure,
    divisorial_betti,
    exc_name,
    exceptional_resolution,
    gaeta_exponents,
    gaeta_frame,
    gaeta_shape_of,
    generalized_gaeta,
    mapping_cone_blocks,
    min_curve_degree,
    qk_shape,
    residual_length,
    zero_locus_length,
    zero_locus_shape,
)


# -----------------------------------------------
# Formas graduadas
# -----------------------------------------------

def test_shape_normalization():
    """Testa que twists repetidos somam e multiplicidades nulas somem."""
    shape = GradedShape(((-3, 1), (-3, 2), (-4, 0)), ((-2, 1),))
    assert shape.sources == ((-3, 3),)
    assert shape.rank == -2
    with pytest.raises(NegativeExponentError):
        GradedShape(((-3, -1),), ())


def test_shape_class_and_twist():
    """Testa a classe de O(−4) → O(−3)² e o twist de formas."""
    shape = GradedShape(((-4, 1),), ((-3, 2),))
    assert shape.class_of() == LogChern(1, -2, 1)
    assert shape.twist_by(2) == GradedShape(((-2, 1),), ((-1, 2),))
    assert shape.is_pure()


def test_conservation_failure():
    """Testa que uma forma com classe errada é rejeitada."""
    with pytest.raises(ConservationError):
        GradedShape.of([(-5, 1)], [(-3, 2)], ideal_points(7))


def test_shape_json_and_str():
    """Testa a serialização de O(−5)² → O(−4) ⊕ O(−3)²."""
    shape = GradedShape(((-5, 2),), ((-4, 1), (-3, 2)))
    assert shape.to_json() == {"sources": [[-5, 2]], "targets": [[-4, 1], [-3, 2]]}
    assert str(shape) == "O(-5)² → O(-4) ⊕ O(-3)²"


# -----------------------------------------------
# Gaeta para ideais de pontos
# -----------------------------------------------

@pytest.mark.parametrize("n, d", [(1, 1), (6, 3), (7, 3), (9, 3), (10, 4), (12, 4)])
def test_min_curve_degree(n, d):
    """Testa C(d+1, 2) <= n < C(d+2, 2)."""
    assert min_curve_degree(n) == d


def test_min_curve_degree_rejects_zero():
    """Testa que n = 0 é inválido."""
    with pytest.raises(ShapeError):
        min_curve_degree(0)


@pytest.mark.parametrize(
    "n, exponents, text",
    [
        (7, (3, 1, -1), "O(-5) ⊕ O(-4) → O(-3)³"),
        (8, (2, -1, -2), "O(-5)² → O(-4) ⊕ O(-3)²"),
        (6, (4, 3, 0), "O(-4)³ → O(-3)⁴"),
        (2896, (30, -17, -46), "O(-77)⁴⁶ → O(-76)¹⁷ ⊕ O(-75)³⁰"),
    ],
)
def test_gaeta_exponents(n, exponents, text):
    """Testa expoentes e forma da resolução de Gaeta."""
    result = gaeta_exponents(n)
    assert (result.n1, result.n2, result.n3) == exponents
    assert str(result.shape) == text


def test_gaeta_shape_agrees_with_beilinson():
    """Testa que a forma por caracteres coincide com a forma por expoentes."""
    for n in range(1, 60):
        assert gaeta_frame(ideal_points(n)) == min_curve_degree(n)
        assert gaeta_shape_of(ideal_points(n)) == gaeta_exponents(n).shape


def test_exceptional_resolution():
    """Testa a sequência de Euler O(−1) → O³ para T(−1)."""
    assert exceptional_resolution(Fraction(1, 2)) == GradedShape(((-1, 1),), ((0, 3),))


# -----------------------------------------------
# Casos puros
# -----------------------------------------------

@pytest.mark.parametrize(
    "n, label",
    [(6, "Triangular(3)"), (12, "Tangential(2)"), (7, "NotPure"), (4, "Tangential(1)")],
)
def test_classify_pure(n, label):
    """Testa a classificação triangular / tangencial."""
    assert str(classify_pure(n)) == label


@pytest.mark.parametrize(
    "n, text",
    [
        (12, "O(-6)² ⊕ O(-5) → O(-5) ⊕ O(-4)³"),
        (10, "O(-6) ⊕ O(-5) → O(-4)² ⊕ O(-3)"),
        (6, "O(-5) → O(-3) ⊕ O(-2)"),
    ],
)
def test_divisorial_betti(n, text):
    """Testa as tabelas de Betti divisoriais."""
    shape = divisorial_betti(n)
    assert str(shape) == text
    assert shape.class_of() == ideal_points(n)


@pytest.mark.parametrize("n", [3, 7])
def test_divisorial_betti_rejects(n):
    """Testa n não puro e triangular com d <= 2."""
    with pytest.raises(NotPureError):
        divisorial_betti(n)


def test_qk_shapes():
    """Testa a família qk e seus limites."""
    assert qk_shape(2, 0) == GradedShape(((-6, 2),), ((-4, 3),))
    assert qk_shape(3, 2).class_of() == ideal_points(24)
    with pytest.raises(ShapeError):
        qk_shape(3, 4)


def test_zero_locus():
    """Testa o lugar de zeros de uma seção de T(2d−2) e o resíduo."""
    assert zero_locus_shape(2) == GradedShape(((-7, 1), (-5, 1)), ((-4, 3),))
    for d in range(1, 8):
        assert zero_locus_length(d) == 2 * d * (d + 1) + residual_length(d)
        assert zero_locus_shape(d).class_of() == ideal_points(zero_locus_length(d))


# -----------------------------------------------
# Gaeta generalizada e blocos
# -----------------------------------------------

def test_exc_name():
    """Testa os nomes O(k), T(j) e E_{s}."""
    assert exc_name(Fraction(3)) == "O(3)"
    assert exc_name(Fraction(-5, 2)) == "T(-4)"
    assert exc_name(Fraction(12, 5)) == "E_{12/5}"


def test_generalized_gaeta_seven():
    """Testa O(−5) → T(−4) para I_7."""
    gg = generalized_gaeta(ideal_points(7))
    assert gg.sign == "zero"
    assert gg.controlling.slope == Fraction(12, 5)
    assert (gg.m2, gg.m3) == (1, 1)
    assert str(gg) == "O(-5) → T(-4)"


def test_generalized_gaeta_positive():
    """Testa T(−21)³ → O(−17)² ⊕ E_{−83/5} para I_163."""
    gg = generalized_gaeta(ideal_points(163))
    assert gg.sign == "positive"
    assert (gg.alpha, gg.beta) == (Fraction(33, 2), Fraction(17))
    assert (gg.m1, gg.m2, gg.m3) == (1, 2, 3)
    assert [(s.slope, s.mult) for s in gg.sources] == [(Fraction(-39, 2), 3)]
    assert {(t.slope, t.mult) for t in gg.targets} == {
        (Fraction(-17), 2),
        (Fraction(-83, 5), 1),
    }


def test_generalized_gaeta_large():
    """Testa E_{−388/5}⁵ → E_{−970/13}² para I_2896."""
    gg = generalized_gaeta(ideal_points(2896))
    assert gg.sign == "zero"
    assert (gg.m2, gg.m3) == (2, 5)
    assert str(gg) == "E_{-388/5}^5 → E_{-970/13}^2"
    assert gg.to_json()["controlling"] == "14475/194"


def test_cone_blocks_large():
    """Testa os blocos A e B do cone para I_2896."""
    blocks = mapping_cone_blocks(ideal_points(2896))
    assert blocks.frame == 75
    assert blocks.f_block == GradedShape(((-77, 6),), ((-76, 2), (-75, 30)))
    assert blocks.residual == GradedShape(((-77, 40),), ((-76, 15),))
    assert blocks.total() == gaeta_exponents(2896).shape


def test_cone_blocks_positive():
    """Testa F = O(−19) → O(−17)⁶ e W = O(−19)⁹ → O(−18)³ ⊕ O(−17)² para I_163."""
    blocks = mapping_cone_blocks(ideal_points(163))
    assert blocks.f_block == GradedShape(((-19, 1),), ((-17, 6),))
    assert blocks.residual == GradedShape(((-19, 9),), ((-18, 3), (-17, 2)))
    assert blocks.to_json()["frame"] == 17


def test_cone_blocks_negative():
    """Testa O(−6) ⊕ O(−5)² → O(−4)⁴ para I_11: F = O(−5)² → O(−4)⁴ e W = O(−6)."""
    gg = generalized_gaeta(ideal_points(11))
    assert gg.sign == "negative"
    assert gg.controlling.slope == 3
    assert (gg.m1, gg.m2, gg.m3) == (1, 4, 2)
    assert str(gg) == "O(-6) ⊕ O(-5)^2 → O(-4)^4"
    blocks = mapping_cone_blocks(ideal_points(11))
    assert blocks.frame == 4
    assert blocks.f_block == GradedShape(((-5, 2),), ((-4, 4),))
    assert blocks.residual == GradedShape(((-6, 1),), ())
    assert blocks.total() == gaeta_exponents(11).shape
    assert blocks.to_json()["W"] == GradedShape(((-6, 1),), ()).to_json()


def test_gaeta_sweep():
    """Testa pureza, blocos e sinal de χ(E_{−(α·β)}, I_n) para 3 <= n <= 500."""
    signs = {"positive": 0, "negative": 0, "zero": 0}
    for n in range(3, 501):
        xi = ideal_points(n)
        shape = gaeta_shape_of(xi)
        assert shape == gaeta_exponents(n).shape
        assert (classify_pure(n).kind != "not_pure") == shape.is_pure(), n
        assert mapping_cone_blocks(xi).total() == shape, n
        signs[generalized_gaeta(xi).sign] += 1
    assert signs == {"positive": 238, "negative": 197, "zero": 63}


def test_beilinson_shape():
    """Testa a decomposição nos twists O(−5), O(−4), O(−3)."""
    assert beilinson_shape(ideal_points(7), 3) == gaeta_exponents(7).shape
    assert beilinson_shape(tangent(-4), 3) == GradedShape(((-4, 1),), ((-3, 3),))
