#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Testes da serialização de racionais, formas graduadas e documentos.
"""

import json
from fractions import Fraction

import pytest

from p2moduli.utils.serialization import dumps, fmt_map, fmt_q, parse_q, q_json, tsv


@pytest.mark.parametrize(
    "value, text",
    [(Fraction(12, 5), "12/5"), (Fraction(-25, 2), "-25/2"), (7, "7"), (Fraction(6, 3), "2")],
)
def test_fmt_q(value, text):
    """Testa a forma "p/q" reduzida."""
    assert fmt_q(value) == text
    assert parse_q(text) == value


def test_q_json():
    """Testa o par numerador/denominador."""
    assert q_json(Fraction(-83, 5)) == {"num": -83, "den": 5}


def test_fmt_map():
    """Testa as formas Unicode e ASCII de um mapa graduado."""
    assert fmt_map([(-5, 1), (-4, 1)], [(-3, 3)]) == "O(-5) ⊕ O(-4) → O(-3)³"
    assert fmt_map([(-4, 1)], [(0, 2)], unicode=False) == "O(-4) -> O^2"
    assert fmt_map([], [(-1, 0)]) == "0 → 0"


def test_dumps_is_sorted_and_exact():
    """Testa JSON com chaves ordenadas e frações como texto."""
    text = dumps({"mu": Fraction(25, 7), "d": 4})
    assert text.index('"d"') < text.index('"mu"')
    assert json.loads(text) == {"d": 4, "mu": "25/7"}
    with pytest.raises(TypeError):
        dumps({"x": object()})


def test_tsv():
    """Testa linhas TSV com racionais e booleanos."""
    assert tsv([["n", "mu"], [7, Fraction(12, 5)], ["ok", True]]) == "n\tmu\n7\t12/5\nok\tTrue"
