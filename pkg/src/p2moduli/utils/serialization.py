#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Serialização de resultados: racionais "p/q", formas graduadas, TSV e JSON.

A saída JSON sempre usa chaves ordenadas para ser estável byte a byte.
"""

import json
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Sequence, Tuple, Union

Number = Union[int, Fraction]

_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def fmt_q(value: Any) -> str:
    """Formata um racional como "p/q" (inteiros sem denominador)."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_q(text: Union[str, int]) -> Fraction:
    """Interpreta "p/q" ou um inteiro."""
    return Fraction(str(text).strip())


def q_json(value: Any) -> Dict[str, int]:
    value = Fraction(value)
    return {"num": value.numerator, "den": value.denominator}


def fmt_twist(twist: int) -> str:
    return f"O({twist})" if twist != 0 else "O"


def fmt_summands(terms: Sequence[Tuple[int, int]], unicode: bool = True) -> str:
    """Renderiza [(t, m), ...] como "O(t)^m ⊕ ..." ("0" se vazio)."""
    parts = []
    for twist, mult in terms:
        if mult == 0:
            continue
        base = fmt_twist(twist)
        if mult != 1:
            base += str(mult).translate(_SUPERSCRIPTS) if unicode else f"^{mult}"
        parts.append(base)
    if not parts:
        return "0"
    return (" ⊕ " if unicode else " + ").join(parts)


def fmt_map(sources: Sequence[Tuple[int, int]], targets: Sequence[Tuple[int, int]], unicode: bool = True) -> str:
    arrow = " → " if unicode else " -> "
    return fmt_summands(sources, unicode) + arrow + fmt_summands(targets, unicode)


def summands_json(terms: Iterable[Tuple[int, int]]) -> List[List[int]]:
    return [[int(t), int(m)] for t, m in terms]


def dumps(document: Any) -> str:
    """JSON estável: chaves ordenadas, indentação fixa, sem escapes de Unicode."""
    return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False, default=_default)


def _default(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        return fmt_q(obj)
    if hasattr(obj, "to_json"):
        return obj.to_json()
    raise TypeError(f"Objeto não serializável: {type(obj).__name__}")


def tsv(rows: Iterable[Sequence[Any]]) -> str:
    """Linhas separadas por tabulação, racionais em "p/q"."""
    lines = []
    for row in rows:
        cells = []
        for cell in row:
            if isinstance(cell, (Fraction, int)) and not isinstance(cell, bool):
                cells.append(fmt_q(cell))
            else:
                cells.append(str(cell))
        lines.append("\t".join(cells))
    return "\n".join(lines)
