#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Testes da árvore de inclinações excepcionais e do controlador.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from p2moduli.chern import LogChern, euler_pair, ideal_points
from p2moduli.errors import NotExceptionalError, TreeSearchExhausted
from p2moduli.exceptional import (
    ExcSlope,
    compose,
    compose_slopes,
    controlling,
    endpoint_interval,
    exc,
    is_exceptional_slope,
    left_child,
    markov_triple,
    node_list,
    parents,
    right_child,
    target_slope,
)
from p2moduli.surd import Surd


def test_compose_slopes():
    """Testa 0·1 = 1/2 e 0·(1/2) = 2/5."""
    assert compose_slopes(0, 1) == Fraction(1, 2)
    assert compose_slopes(0, Fraction(1, 2)) == Fraction(2, 5)
    assert compose(exc(Fraction(1, 2)), exc(1)).slope == Fraction(3, 5)


def test_compose_rejects_far_slopes():
    """Testa que β − α > 1 não é adjacente."""
    with pytest.raises(NotExceptionalError):
        compose_slopes(0, 2)
    with pytest.raises(NotExceptionalError):
        compose_slopes(1, 0)


@pytest.mark.parametrize(
    "slope, expected",
    [
        (Fraction(12, 5), (Fraction(2), Fraction(5, 2))),
        (Fraction(83, 5), (Fraction(33, 2), Fraction(17))),
        (Fraction(14475, 194), (Fraction(373, 5), Fraction(970, 13))),
    ],
)
def test_parents(slope, expected):
    """Testa a decomposição em pais adjacentes."""
    alpha, beta = parents(slope)
    assert (alpha.slope, beta.slope) == expected
    assert compose(alpha, beta).slope == slope


def test_integer_has_no_parents():
    """Testa que inclinações inteiras são folhas."""
    with pytest.raises(NotExceptionalError):
        parents(2)


def test_rank_and_delta():
    """Testa posto = denominador e Δ = ½(1 − 1/r²)."""
    e = exc(Fraction(14475, 194))
    assert e.rank == 194
    assert e.char() == LogChern(194, Fraction(14475, 194), Fraction(37635, 75272))


def test_nodes_are_rigid_and_markov():
    """Testa χ(E, E) = 1 e a equação de Markov nos nós até profundidade 5."""
    nodes = node_list(5)
    assert len(nodes) == 31
    for node in nodes:
        assert 0 < node.slope < 1
        assert euler_pair(node.char(), node.char()) == 1
        x, y, z = markov_triple(*node.parents)
        assert x * x + y * y + z * z == 3 * x * y * z
        assert y == node.rank


def test_first_levels():
    """Testa os nós 1/2, 2/5 e 3/5 entre 0 e 1."""
    assert {n.slope for n in node_list(2)} == {
        Fraction(1, 2),
        Fraction(2, 5),
        Fraction(3, 5),
    }
    assert {n.slope for n in node_list(1, lo=-3)} == {Fraction(-5, 2)}


def test_is_exceptional_slope():
    """Testa pertinência na árvore."""
    assert is_exceptional_slope(Fraction(12, 5))
    assert is_exceptional_slope(7)
    assert not is_exceptional_slope(Fraction(1, 3), depth_cap=20)


def test_children_of_triple():
    """Testa os filhos α·(α·β) e (α·β)·β."""
    assert left_child(exc(Fraction(1, 2))).slope == Fraction(2, 5)
    assert right_child(exc(Fraction(1, 2))).slope == Fraction(3, 5)
    assert left_child(ExcSlope(Fraction(2))).slope == Fraction(3, 2)
    assert right_child(ExcSlope(Fraction(2))).slope == Fraction(5, 2)


def test_twist_and_dual():
    """Testa translação e dualidade de inclinações."""
    e = exc(Fraction(12, 5))
    shifted = e.twist(-4)
    assert shifted.slope == Fraction(-8, 5)
    assert tuple(p.slope for p in shifted.parents) == (Fraction(-2), Fraction(-3, 2))
    assert e.dual().slope == Fraction(-12, 5)


def test_endpoint_intervals():
    """Testa os intervalos de extremidades de O e E_{1/2}."""
    zero = endpoint_interval(ExcSlope(Fraction(0)))
    assert zero.contains(0)
    assert zero.is_endpoint(Surd(Fraction(-3, 2), Fraction(1, 2), 5))
    half = endpoint_interval(exc(Fraction(1, 2)))
    assert half.contains(Fraction(1, 2))
    assert not half.contains(Fraction(3, 5))


def test_target_slope_for_seven_points():
    """Testa o alvo (√61 − 3)/2 de I_7."""
    assert target_slope(ideal_points(7)) == Surd(Fraction(-3, 2), Fraction(1, 2), 61)


@pytest.mark.parametrize(
    "n, slope, rank",
    [
        (7, Fraction(12, 5), 5),
        (163, Fraction(83, 5), 5),
        (165, Fraction(17), 1),
        (2896, Fraction(14475, 194), 194),
    ],
)
def test_controlling(n, slope, rank):
    """Testa o controlador de I_n."""
    e = controlling(ideal_points(n))
    assert e.slope == slope
    assert e.rank == rank


def test_controlling_depth_cap():
    """Testa o esgotamento da busca com limite de profundidade baixo."""
    with pytest.raises(TreeSearchExhausted):
        controlling(ideal_points(2896), depth_cap=2)


# -----------------------------------------------
# Propriedades em nós aleatórios
# -----------------------------------------------

DEEP_NODES = node_list(8)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(DEEP_NODES), st.integers(min_value=-6, max_value=6))
def test_random_nodes_are_rigid(node, shift):
    """Testa χ(E, E) = 1 em 100 nós aleatórios até profundidade 8, com translação."""
    e = node.twist(shift)
    assert euler_pair(e.char(), e.char()) == 1
    assert e.rank == node.rank


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(DEEP_NODES), st.integers(min_value=-6, max_value=6))
def test_parents_then_compose_is_identity(node, shift):
    """Testa compose(parents(E)) = E e parents(compose(α, β)) = (α, β) até profundidade 8."""
    e = node.twist(shift)
    alpha, beta = parents(e.slope)
    assert compose(alpha, beta).slope == e.slope
    again = parents(compose(alpha, beta))
    assert (again[0].slope, again[1].slope) == (alpha.slope, beta.slope)
    assert alpha.slope < e.slope < beta.slope
