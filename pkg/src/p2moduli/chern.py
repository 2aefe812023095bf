#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Álgebra logarítmica de caracteres de Chern em P².

Um caráter é guardado como (posto, inclinação, discriminante); tudo é
racional exato. Convenção do pareamento: (ξ, ζ) = χ(ξ ⊗ ζ), e
euler_pair(u, v) = χ(u*, v) = χ(u* ⊗ v).
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Tuple, Union

from p2moduli.errors import EqualSlopesError, ShapeError

Q = Fraction
Rational = Union[int, Fraction]

HALF = Fraction(1, 2)
THREE_HALVES = Fraction(3, 2)


@dataclass(frozen=True)
class LogChern:
    """
    Caráter (r, μ, Δ). O posto pode ser qualquer racional não nulo, o que
    permite guardar classes virtuais de complexos de dois termos.
    """

    r: Fraction
    mu: Fraction
    delta: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "r", Fraction(self.r))
        object.__setattr__(self, "mu", Fraction(self.mu))
        object.__setattr__(self, "delta", Fraction(self.delta))
        if self.r == 0:
            raise ShapeError("Caráter de posto zero não tem inclinação")

    @classmethod
    def from_ch(cls, r: Rational, ch1: Rational, ch2: Rational) -> "LogChern":
        """Converte (r, ch₁, ch₂) para (r, μ, Δ)."""
        r, ch1, ch2 = Fraction(r), Fraction(ch1), Fraction(ch2)
        if r == 0:
            raise ShapeError("Caráter de posto zero não tem inclinação")
        mu = ch1 / r
        return cls(r, mu, mu * mu / 2 - ch2 / r)

    @property
    def ch1(self) -> Fraction:
        return self.r * self.mu

    @property
    def ch2(self) -> Fraction:
        return self.r * (self.mu * self.mu / 2 - self.delta)

    def ch(self) -> Tuple[Fraction, Fraction, Fraction]:
        return self.r, self.ch1, self.ch2

    def dual(self) -> "LogChern":
        return LogChern(self.r, -self.mu, self.delta)

    def scale(self, m: Rational) -> "LogChern":
        """Soma direta de m cópias (μ e Δ não mudam)."""
        return LogChern(self.r * m, self.mu, self.delta)

    def tensor(self, other: "LogChern") -> "LogChern":
        return LogChern(self.r * other.r, self.mu + other.mu, self.delta + other.delta)

    def __add__(self, other: "LogChern") -> "LogChern":
        return LogChern.from_ch(*(a + b for a, b in zip(self.ch(), other.ch())))

    def __sub__(self, other: "LogChern") -> "LogChern":
        return LogChern.from_ch(*(a - b for a, b in zip(self.ch(), other.ch())))

    def to_json(self) -> Any:
        from p2moduli.utils.serialization import fmt_q

        return {
            "r": fmt_q(self.r),
            "mu": fmt_q(self.mu),
            "delta": fmt_q(self.delta),
            "c1": fmt_q(self.ch1),
            "ch2": fmt_q(self.ch2),
        }

    def __str__(self) -> str:
        from p2moduli.utils.serialization import fmt_q

        return f"({fmt_q(self.r)}, {fmt_q(self.mu)}, {fmt_q(self.delta)})"


def ch_add(*vectors: Tuple[Fraction, Fraction, Fraction]) -> Tuple[Fraction, Fraction, Fraction]:
    """Soma de vetores (r, ch₁, ch₂); aceita posto total zero."""
    r = ch1 = ch2 = Fraction(0)
    for a, b, c in vectors:
        r, ch1, ch2 = r + a, ch1 + b, ch2 + c
    return r, ch1, ch2


# -----------------------------------------------
# Caracteres padrão
# -----------------------------------------------

def line(k: int) -> LogChern:
    """O(k)."""
    return LogChern(1, k, 0)


def tangent(k: int) -> LogChern:
    """T(k), a partir da sequência de Euler 0 → O → O(1)³ → T → 0."""
    return LogChern(2, THREE_HALVES + k, Fraction(3, 8))


def ideal_points(n: int, k: int = 0) -> LogChern:
    """I_Z(k) para Z de comprimento n; Δ = n independe do twist."""
    if n < 0:
        raise ShapeError(f"Comprimento negativo: {n}")
    return LogChern(1, k, n)


def exceptional(slope: Rational) -> LogChern:
    """E_slope, delegando ao módulo exceptional."""
    from p2moduli.exceptional import exceptional_char

    return exceptional_char(Fraction(slope))


def std_char(kind: str, *args: Rational) -> LogChern:
    """
    Caráter padrão por nome.

    Args:
        kind (str): "line", "tangent", "ideal_points" ou "exceptional".
        *args: Parâmetros do tipo (k; k; n[, k]; slope).

    Returns:
        LogChern: O caráter correspondente.
    """
    builders = {
        "line": line,
        "tangent": tangent,
        "ideal_points": ideal_points,
        "exceptional": exceptional,
    }
    if kind not in builders:
        raise ShapeError(f"Tipo de caráter desconhecido: {kind}")
    return builders[kind](*args)  # type: ignore[operator]


# -----------------------------------------------
# Euler e pareamentos
# -----------------------------------------------

def euler(xi: LogChern) -> Fraction:
    """χ = r(½(μ+1)(μ+2) − Δ)."""
    return xi.r * ((xi.mu + 1) * (xi.mu + 2) / 2 - xi.delta)


def euler_pair(u: LogChern, v: LogChern) -> Fraction:
    """χ(U, V) = r_U r_V(½(μ_V−μ_U+1)(μ_V−μ_U+2) − Δ_U − Δ_V)."""
    m = v.mu - u.mu
    return u.r * v.r * ((m + 1) * (m + 2) / 2 - u.delta - v.delta)


def euler_ch(r: Fraction, ch1: Fraction, ch2: Fraction) -> Fraction:
    """Riemann-Roch em P² direto no vetor de Chern: χ = ch₂ + 3/2·ch₁ + r."""
    return ch2 + THREE_HALVES * ch1 + r


def pairing(xi: LogChern, zeta: LogChern) -> Fraction:
    """(ξ, ζ) = χ(ξ ⊗ ζ)."""
    return euler(xi.tensor(zeta))


def twist(xi: LogChern, k: int) -> LogChern:
    return LogChern(xi.r, xi.mu + k, xi.delta)


def orthogonal_point(f: LogChern, w: LogChern) -> Tuple[Fraction, Fraction]:
    """
    Único (μ, Δ) tal que χ(ξ ⊗ F) = χ(ξ ⊗ W) = 0 para ξ = (r, μ, Δ).

    Para ξ de posto 1 e u = ½μ² − Δ, cada condição é linear em (u, μ):
    r_F·u + (c_F + 3/2·r_F)·μ + (ch₂F + 3/2·c_F + r_F) = 0.

    Raises:
        EqualSlopesError: Se μ_F = μ_W.
    """
    rows = []
    for g in (f, w):
        r, c, d = g.ch()
        rows.append((r, c + THREE_HALVES * r, d + THREE_HALVES * c + r))
    (a1, b1, e1), (a2, b2, e2) = rows
    det = a1 * b2 - a2 * b1
    if det == 0:
        raise EqualSlopesError(
            f"Inclinações iguais ({f.mu}); não há ponto ortogonal único"
        )
    u = (b1 * e2 - b2 * e1) / det
    mu = (a2 * e1 - a1 * e2) / det
    delta = mu * mu / 2 - u
    return mu, delta


# -----------------------------------------------
# Classes de divisores
# -----------------------------------------------

@dataclass(frozen=True)
class CurveClass:
    """Classe de curva dada pelas interseções (β·H, β·½B)."""

    beta_h: Fraction
    beta_half_b: Fraction


@dataclass(frozen=True)
class DivisorClass:
    """Classe a·H + b·B, comparada como raio."""

    a: Fraction
    b: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    @classmethod
    def from_slope(cls, mu: Rational) -> "DivisorClass":
        """μ·H − ½B."""
        return cls(Fraction(mu), -HALF)

    @property
    def slope(self) -> Fraction:
        """Coeficiente de H depois de normalizar b para −½."""
        if self.b >= 0:
            raise ShapeError("Inclinação só é definida para b < 0")
        return self.a / (-2 * self.b)

    def same_ray(self, other: "DivisorClass") -> bool:
        if self.a * other.b != other.a * self.b:
            return False
        # mesmo sentido: produto escalar positivo
        return self.a * other.a + self.b * other.b > 0

    def pair(self, curve: CurveClass) -> Fraction:
        """D·β com H·β = β_H e ½B·β = β_½B."""
        return self.a * curve.beta_h + 2 * self.b * curve.beta_half_b

    def __str__(self) -> str:
        from p2moduli.utils.serialization import fmt_q

        return f"{fmt_q(self.a)}H {'-' if self.b < 0 else '+'} {fmt_q(abs(self.b))}B"
