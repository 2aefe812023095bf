#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Testes de h⁰(M ⊗ I_Z), das seções de T(2d−2) e do veredito de ortogonalidade.
"""

from fractions import Fraction

import pytest

from p2moduli.chern import tangent
from p2moduli.errors import CertificateError, FieldMismatchError, ShapeError
from p2moduli.exactalg import HPoly
from p2moduli.gaeta import divisorial_betti, qk_shape, zero_locus_length, zero_locus_shape
from p2moduli.interp import (
    CokerBundle,
    check_orthogonal,
    euler_of_pair,
    h0_twisted,
    interpolating_tangential,
    interpolating_triangular,
    tangent_section_count,
)
from p2moduli.points import PointConfig, generate_config, ideal_dim, random_hilbert_burch

COORDINATE = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


# -----------------------------------------------
# Fibrados por cokernel
# -----------------------------------------------

def test_euler_tangent_class(qq):
    """Testa que coker(O → O(1)³) tem a classe de T."""
    assert CokerBundle.euler_tangent(qq, 0).class_of() == tangent(0)
    assert CokerBundle.euler_tangent(qq, 2).class_of() == tangent(2)


def test_coker_bundle_validation(gf):
    """Testa posto não positivo e fontes abaixo de −2."""
    with pytest.raises(ShapeError):
        CokerBundle.general([(0, 3)], [(1, 3)], gf)
    with pytest.raises(ShapeError):
        CokerBundle.general([(-3, 1)], [(0, 2)], gf)


def test_interpolating_bundles():
    """Testa as inclinações dos fibrados interpoladores gerais."""
    assert interpolating_triangular(3).class_of().mu == Fraction(5, 2)
    tan = interpolating_tangential(2)
    assert tan.rank == 7
    assert tan.class_of().mu == Fraction(25, 7)


def test_structured_tangential_variant(gf):
    """Testa os blocos de monômios quadráticos da variante estruturada."""
    M = interpolating_tangential(2, fld=gf, structured=True)
    assert M.phi.shape == (9, 2)
    x, _, _ = HPoly.variables(gf)
    assert M.phi.entry(0, 0) == x * x
    assert M.phi.entry(7, 0).is_zero()
    with pytest.raises(ShapeError):
        interpolating_tangential(2, k=3, fld=gf, structured=True)


# -----------------------------------------------
# h⁰(M ⊗ I_Z)
# -----------------------------------------------

def test_empty_scheme_gives_global_sections(qq):
    """Testa h⁰ = dim H⁰(⊕O(b)) − posto Φ₀ quando Z é vazio."""
    empty = PointConfig(qq, ())
    assert h0_twisted(CokerBundle.line_bundle(qq, 2), empty) == 6
    assert h0_twisted(CokerBundle.euler_tangent(qq, 0), empty) == 8
    assert tangent_section_count(empty, 2) == 24


@pytest.mark.parametrize("model", ["fiber", "restriction"])
def test_line_bundle_matches_ideal_dim(qq, model):
    """Testa h⁰(O(m) ⊗ I_Z) = dim (I_Z)_m nos dois modelos."""
    z = PointConfig(qq, COORDINATE)
    for m in range(4):
        M = CokerBundle.line_bundle(qq, m)
        assert h0_twisted(M, z, model=model) == ideal_dim(z, m).h0


@pytest.mark.parametrize("model", ["fiber", "restriction"])
def test_tangent_vanishing_at_coordinate_points(qq, model):
    """Testa que os campos diagonais são as seções de T nulas nos pontos coordenados."""
    z = PointConfig(qq, COORDINATE)
    assert h0_twisted(CokerBundle.euler_tangent(qq, 0), z, model=model) == 2


def test_general_points_impose_independent_conditions(gf):
    """Testa h⁰(O(2) ⊗ I_Z) = max(0, 6 − n) e a monotonia em Z."""
    z = generate_config("general", 8, seed=4, fld=gf)
    M = CokerBundle.line_bundle(gf, 2)
    previous = None
    for n in range(0, 9):
        value = h0_twisted(M, z.with_points(z.points[:n]))
        assert value == max(0, 6 - n)
        if previous is not None:
            assert value <= previous
        previous = value


def test_model_errors(qq, gf):
    """Testa modelo desconhecido, fibras sem pontos e corpos diferentes."""
    z = PointConfig(qq, COORDINATE)
    M = CokerBundle.line_bundle(qq, 1)
    with pytest.raises(ShapeError):
        h0_twisted(M, z, model="quantum")
    with pytest.raises(FieldMismatchError):
        h0_twisted(CokerBundle.line_bundle(gf, 1), z)
    handle = random_hilbert_burch(qk_shape(2, 0), qq, seed=1)
    with pytest.raises(ShapeError):
        h0_twisted(M, handle, model="fiber")


# -----------------------------------------------
# Seções de T(2d−2) em esquemas qk
# -----------------------------------------------

@pytest.mark.parametrize("d, k", [(2, 1), (2, 2)])
def test_qk_tangent_sections(gf, d, k):
    """Testa h⁰(T(2d−2) ⊗ I_Z) = k para esquemas com resolução qk."""
    z = random_hilbert_burch(qk_shape(d, k), gf, seed=0)
    assert z.length == 2 * d * (d + 1)
    assert tangent_section_count(z, d) == k


@pytest.mark.slow
@pytest.mark.parametrize("d, k", [(3, 1), (3, 2)])
def test_qk_tangent_sections_cubic(gf, d, k):
    """Testa h⁰(T(4) ⊗ I_Z) = k para n = 24."""
    z = random_hilbert_burch(qk_shape(d, k), gf, seed=0)
    assert tangent_section_count(z, d) == k


# -----------------------------------------------
# Veredito de ortogonalidade
# -----------------------------------------------

def test_verdicts_on_points(qq):
    """Testa χ não nulo, ortogonalidade e falha de h⁰."""
    five = PointConfig(qq, ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3)))
    verdict = check_orthogonal(CokerBundle.line_bundle(qq, 1), five)
    assert str(verdict) == "chi_nonzero(-2)"

    one = PointConfig(qq, ((1, 2, 3),))
    assert check_orthogonal(CokerBundle.line_bundle(qq, 0), one).kind == "orthogonal"

    collinear = PointConfig(qq, ((1, 0, 0), (0, 1, 0), (1, 1, 0)))
    verdict = check_orthogonal(CokerBundle.line_bundle(qq, 1), collinear)
    assert verdict.kind == "fails_h0"
    assert str(verdict) == "fails_h0(1)"


def test_euler_of_pair(qq):
    """Testa χ(T ⊗ I_3) = 8 − 6."""
    z = PointConfig(qq, COORDINATE)
    assert euler_of_pair(CokerBundle.euler_tangent(qq, 0), z) == 2


def test_uncertified_low_twist(qq):
    """Testa que alvos abaixo de −2 não certificam h²."""
    one = PointConfig(qq, ((1, 2, 3),))
    with pytest.raises(CertificateError):
        check_orthogonal(CokerBundle.line_bundle(qq, -3), one)


@pytest.mark.slow
def test_tangential_bundle_is_orthogonal(gf):
    """Testa h⁰(M ⊗ I_Z) = 0 para o fibrado tangencial com d = 2 e Z em D_Betti."""
    z = random_hilbert_burch(divisorial_betti(12), gf, seed=0)
    M = interpolating_tangential(2, fld=gf, seed=1)
    assert check_orthogonal(M, z).kind == "orthogonal"


@pytest.mark.slow
def test_tangential_bundle_is_orthogonal_cubic(gf):
    """Testa h⁰(M ⊗ I_Z) = 0 para o fibrado tangencial com d = 3 e Z em D_Betti (n = 24)."""
    z = random_hilbert_burch(divisorial_betti(24), gf, seed=0)
    assert z.length == 24
    M = interpolating_tangential(3, fld=gf, seed=1)
    verdict = check_orthogonal(M, z)
    assert verdict.kind == "orthogonal"
    assert str(verdict) == "orthogonal"


# -----------------------------------------------
# Lugar de zeros de uma seção de T(2d−2)
# -----------------------------------------------

@pytest.mark.parametrize("d", [2, pytest.param(3, marks=pytest.mark.slow)])
def test_zero_locus_quartic_sections(gf, d):
    """Testa h⁰(I_Γ(4d−4)) = 4d² − 8d + 3 para Γ com a resolução do lugar de zeros."""
    z = random_hilbert_burch(zero_locus_shape(d), gf, seed=d)
    assert z.length == zero_locus_length(d)
    assert ideal_dim(z, 4 * d - 4).h0 == 4 * d * d - 8 * d + 3
