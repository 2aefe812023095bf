#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Surds quadráticos a + b·√d com a, b racionais e d inteiro não negativo.

Comparações são decididas em aritmética inteira, elevando ao quadrado com
controle explícito de sinais; nenhum ponto flutuante participa da decisão.
"""

import math
from collections import namedtuple
from fractions import Fraction
from functools import lru_cache
from typing import Union

from p2moduli.errors import ShapeError

Rational = Union[int, Fraction]


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


@lru_cache(maxsize=None)
def sign_single(a: Fraction, b: Fraction, d: int) -> int:
    """Sinal de a + b·√d."""
    sa, sb = _sign(a), _sign(b) if d else 0
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    # sinais opostos: compara a² com b²·d
    return sa * _sign(a * a - b * b * d)


def sign_double(p: Fraction, q: Fraction, a: int, s: Fraction, b: int) -> int:
    """Sinal de p + q·√a + s·√b."""
    sx = sign_single(p, q, a)
    sy = _sign(s) if b else 0
    if sy == 0:
        return sx
    if sx == 0 or sx == sy:
        return sy
    # |X| contra |Y| via X² − Y² = (p² + q²a − s²b) + 2pq·√a
    return sx * sign_single(p * p + q * q * a - s * s * b, 2 * p * q, a)


class Surd(namedtuple("Surd", ["a", "b", "d"])):
    """Número a + b·√d; d quadrado perfeito é absorvido em a."""

    __slots__ = ()

    def __new__(cls, a: Rational, b: Rational = 0, d: int = 0) -> "Surd":
        a, b, d = Fraction(a), Fraction(b), int(d)
        if d < 0:
            raise ShapeError(f"Radicando negativo: {d}")
        root = math.isqrt(d)
        if b == 0 or d == 0:
            return super().__new__(cls, a, Fraction(0), 0)
        if root * root == d:
            return super().__new__(cls, a + b * root, Fraction(0), 0)
        return super().__new__(cls, a, b, d)

    @classmethod
    def sqrt(cls, x: Rational) -> "Surd":
        """√x para x racional não negativo, como b·√d com d inteiro."""
        x = Fraction(x)
        if x < 0:
            raise ShapeError(f"Raiz de número negativo: {x}")
        # √(p/q) = √(p·q)/q
        return cls(0, Fraction(1, x.denominator), x.numerator * x.denominator)

    def _lift(self, other: Union["Surd", Rational]) -> "Surd":
        return other if isinstance(other, Surd) else Surd(other)

    def __add__(self, other: Union["Surd", Rational]) -> "Surd":  # type: ignore[override]
        o = self._lift(other)
        if o.d == 0:
            return Surd(self.a + o.a, self.b, self.d)
        if self.d == 0:
            return Surd(self.a + o.a, o.b, o.d)
        if self.d != o.d:
            raise ShapeError("Soma de surds com radicandos diferentes")
        return Surd(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self) -> "Surd":
        return Surd(-self.a, -self.b, self.d)

    def __sub__(self, other: Union["Surd", Rational]) -> "Surd":
        return self + (-self._lift(other))

    def __rsub__(self, other: Rational) -> "Surd":
        return (-self) + other

    def __mul__(self, other: Rational) -> "Surd":  # type: ignore[override]
        if isinstance(other, Surd):
            raise ShapeError("Produto de surds não suportado")
        c = Fraction(other)
        return Surd(self.a * c, self.b * c, self.d)

    __rmul__ = __mul__

    def __truediv__(self, other: Rational) -> "Surd":
        return self * (1 / Fraction(other))

    def sign(self) -> int:
        return sign_single(self.a, self.b, self.d)

    def compare(self, other: Union["Surd", Rational]) -> int:
        """−1, 0 ou 1 conforme self <, =, > other."""
        o = self._lift(other)
        if self.d == o.d or o.d == 0 or self.d == 0:
            return (self - o).sign()
        return sign_double(self.a - o.a, self.b, self.d, -o.b, o.d)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, (Surd, int, Fraction)):
            return NotImplemented
        return self.compare(other) == 0

    def __lt__(self, other: Union["Surd", Rational]) -> bool:  # type: ignore[override]
        return self.compare(other) < 0

    def __le__(self, other: Union["Surd", Rational]) -> bool:  # type: ignore[override]
        return self.compare(other) <= 0

    def __gt__(self, other: Union["Surd", Rational]) -> bool:  # type: ignore[override]
        return self.compare(other) > 0

    def __ge__(self, other: Union["Surd", Rational]) -> bool:  # type: ignore[override]
        return self.compare(other) >= 0

    def __ne__(self, other: object) -> bool:
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.d))

    def floor(self) -> int:
        """Maior inteiro <= self, decidido exatamente."""
        guess = math.floor(float(self))
        while Surd(guess) > self:
            guess -= 1
        while Surd(guess + 1) <= self:
            guess += 1
        return guess

    def is_rational(self) -> bool:
        return self.b == 0

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __str__(self) -> str:
        from p2moduli.utils.serialization import fmt_q

        if self.b == 0:
            return fmt_q(self.a)
        sign = "+" if self.b > 0 else "-"
        return f"{fmt_q(self.a)} {sign} {fmt_q(abs(self.b))}·√{self.d}"
