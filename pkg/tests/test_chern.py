#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Testes dos caracteres de Chern logarítmicos e do pareamento de Euler.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from p2moduli.chern import (
    CurveClass,
    DivisorClass,
    LogChern,
    euler,
    euler_pair,
    ideal_points,
    line,
    orthogonal_point,
    pairing,
    std_char,
    tangent,
    twist,
)
from p2moduli.errors import EqualSlopesError, ShapeError
from p2moduli.exceptional import exceptional_char

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
ranks = st.integers(min_value=1, max_value=6)


@st.composite
def characters(draw):
    return LogChern(draw(ranks), draw(fractions), draw(fractions))


def test_standard_characters():
    """Testa os caracteres de O(−3), T e I_7."""
    assert line(-3) == LogChern(1, -3, 0)
    assert tangent(0) == LogChern(2, Fraction(3, 2), Fraction(3, 8))
    assert ideal_points(7) == LogChern(1, 0, 7)
    assert ideal_points(7).ch2 == -7


def test_std_char_by_name():
    """Testa a construção de caracteres por nome."""
    assert std_char("ideal_points", 1, -2) == LogChern(1, -2, 1)
    assert std_char("exceptional", Fraction(1, 2)) == tangent(-1)
    with pytest.raises(ShapeError):
        std_char("sheaf", 1)


def test_rank_zero_is_rejected():
    """Testa que posto zero não tem inclinação."""
    with pytest.raises(ShapeError):
        LogChern.from_ch(0, 1, 0)


@pytest.mark.parametrize(
    "xi, expected",
    [
        (ideal_points(7), -6),
        (ideal_points(1), 0),
        (tangent(0), 8),
        (exceptional_char(Fraction(12, 5)), 35),
    ],
)
def test_euler(xi, expected):
    """Testa χ por Riemann-Roch."""
    assert euler(xi) == expected


def test_euler_pairs():
    """Testa χ(O(−3), I_7) = 3 e χ(T(−d−1), I_n) = d(d+2) − 2n."""
    assert euler_pair(line(-3), ideal_points(7)) == 3
    for n, d in ((7, 3), (12, 4), (8, 3)):
        assert euler_pair(tangent(-d - 1), ideal_points(n)) == d * (d + 2) - 2 * n


def test_exceptional_is_rigid():
    """Testa χ(E, E) = 1 para E_{1/2}."""
    e = exceptional_char(Fraction(1, 2))
    assert euler_pair(e, e) == 1


def test_twists():
    """Testa a aditividade logarítmica sob twist."""
    assert twist(ideal_points(1), -2) == LogChern(1, -2, 1)
    assert twist(tangent(0), -4) == LogChern(2, Fraction(-5, 2), Fraction(3, 8))


def test_tensor_is_log_additive():
    """Testa O(1) ⊗ T = T(1)."""
    assert line(1).tensor(tangent(0)) == tangent(1)


def test_euler_sequence_additivity():
    """Testa T = O(1)³ − O como soma de caracteres."""
    assert line(1).scale(3) - line(0) == tangent(0)


@settings(max_examples=1000, deadline=None)
@given(characters(), characters(), characters())
def test_pairing_is_bilinear_under_sums(a, b, c):
    """Testa (a + b, c) = (a, c) + (b, c) no pareamento χ(ξ ⊗ ζ)."""
    total = a + b
    assert pairing(total, c) == pairing(a, c) + pairing(b, c)


@settings(max_examples=200, deadline=None)
@given(characters(), characters())
def test_pairing_matches_euler_of_dual(a, b):
    """Testa χ(ξ ⊗ ζ) = χ(ξ*, ζ)."""
    assert pairing(a, b) == euler_pair(a.dual(), b)


@settings(max_examples=100, deadline=None)
@given(characters())
def test_from_ch_round_trip(xi):
    """Testa que (r, μ, Δ) → ch → (r, μ, Δ) é a identidade."""
    assert LogChern.from_ch(*xi.ch()) == xi


def test_orthogonal_point_tangential():
    """Testa μ = 25/7 para F = T(−5) contra I_12."""
    f = tangent(-5)
    w = ideal_points(12)
    mu, delta = orthogonal_point(f, w)
    assert mu == Fraction(25, 7)
    for g in (f, w):
        assert pairing(LogChern(1, mu, delta), g) == 0


def test_orthogonal_point_triangular():
    """Testa μ = 5/2 para F = O(−2) contra I_6."""
    f = line(-2)
    w = ideal_points(6)
    mu, delta = orthogonal_point(f, w)
    assert mu == Fraction(5, 2)
    assert pairing(LogChern(3, mu, delta), f) == 0
    assert pairing(LogChern(3, mu, delta), w) == 0


def test_orthogonal_point_equal_slopes():
    """Testa que O(−2) e [O(−4) → O(−3)²] têm a mesma inclinação."""
    w = line(-3).scale(2) - line(-4)
    assert w == LogChern(1, -2, 1)
    with pytest.raises(EqualSlopesError):
        orthogonal_point(line(-2), w)


def test_divisor_classes():
    """Testa raios μH − ½B e o pareamento com curvas."""
    d = DivisorClass.from_slope(Fraction(25, 7))
    assert d.slope == Fraction(25, 7)
    assert d.same_ray(DivisorClass(Fraction(50, 7), -1))
    assert not d.same_ray(DivisorClass(Fraction(-50, 7), 1))
    assert d.pair(CurveClass(Fraction(7), Fraction(25))) == 0
    assert str(d) == "25/7H - 1/2B"
