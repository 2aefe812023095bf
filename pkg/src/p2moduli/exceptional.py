#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Árvore diádica de inclinações excepcionais.

Fornece composição de inclinações, posto e discriminante, decomposição em
pais, intervalos de extremidades (surds exatos) e a busca do fibrado
excepcional controlador de um caráter.
"""

import logging
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, List, Optional, Tuple, Union

from p2moduli.chern import LogChern, euler_pair
from p2moduli.errors import NotExceptionalError, ShapeError, TreeSearchExhausted
from p2moduli.surd import Surd

logger = logging.getLogger("p2moduli.exceptional")

Rational = Union[int, Fraction]

DEFAULT_DEPTH_CAP = 64


@dataclass(frozen=True)
class ExcSlope:
    """Inclinação excepcional com os pais que a geram (ausentes para inteiros)."""

    slope: Fraction
    parents: Optional[Tuple["ExcSlope", "ExcSlope"]] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "slope", Fraction(self.slope))

    @property
    def rank(self) -> int:
        return self.slope.denominator

    @property
    def delta(self) -> Fraction:
        return (1 - Fraction(1, self.rank ** 2)) / 2

    def char(self) -> LogChern:
        return LogChern(self.rank, self.slope, self.delta)

    def twist(self, k: int) -> "ExcSlope":
        """E_{s+k}; a árvore em s+1 é a translação da árvore em s."""
        if self.parents is None:
            return ExcSlope(self.slope + k)
        alpha, beta = self.parents
        return ExcSlope(self.slope + k, (alpha.twist(k), beta.twist(k)))

    def dual(self) -> "ExcSlope":
        return exc(-self.slope)

    def __str__(self) -> str:
        from p2moduli.utils.serialization import fmt_q

        return fmt_q(self.slope)


@dataclass(frozen=True)
class EndpointInterval:
    """
    Vizinhança [centro − w, centro + w] de uma inclinação excepcional, com
    w = (3 − √(9 − 4/r²))/2 guardado como surd exato.
    """

    center: Fraction
    half_width: Surd

    @property
    def lo(self) -> Surd:
        return Surd(self.center) - self.half_width

    @property
    def hi(self) -> Surd:
        return Surd(self.center) + self.half_width

    def contains(self, x: Union[Surd, Rational]) -> bool:
        return self.lo <= x <= self.hi

    def is_endpoint(self, x: Union[Surd, Rational]) -> bool:
        return self.lo == x or self.hi == x


def _delta(slope: Fraction) -> Fraction:
    r = slope.denominator
    return (1 - Fraction(1, r * r)) / 2


def compose_slopes(alpha: Rational, beta: Rational) -> Fraction:
    """α·β = (α+β)/2 + (Δ_β − Δ_α)/(3 + α − β)."""
    alpha, beta = Fraction(alpha), Fraction(beta)
    if not alpha < beta or beta - alpha > 1:
        raise NotExceptionalError(
            f"Composição exige α < β ≤ α + 1, recebido ({alpha}, {beta})"
        )
    return (alpha + beta) / 2 + (_delta(beta) - _delta(alpha)) / (3 + alpha - beta)


def compose(alpha: ExcSlope, beta: ExcSlope) -> ExcSlope:
    """
    Compõe duas inclinações adjacentes da árvore.

    Args:
        alpha (ExcSlope): Inclinação menor.
        beta (ExcSlope): Inclinação maior, com β − α ≤ 1.

    Returns:
        ExcSlope: α·β, estritamente entre α e β.
    """
    value = compose_slopes(alpha.slope, beta.slope)
    result = ExcSlope(value, (alpha, beta))
    if not alpha.slope < value < beta.slope:
        raise NotExceptionalError(f"Composição fora do intervalo: {value}")
    # consistência de Δ: χ(E, E) = 1 com posto igual ao denominador
    if euler_pair(result.char(), result.char()) != 1:
        raise NotExceptionalError(f"χ(E,E) ≠ 1 para {value}")
    return result


@lru_cache(maxsize=4096)
def _descend(slope: Fraction, depth_cap: int) -> Tuple[Fraction, ...]:
    """Caminho (α, β) na árvore até a inclinação; vazio para inteiros."""
    if slope.denominator == 1:
        return ()
    alpha = Fraction(slope.numerator // slope.denominator)
    beta = alpha + 1
    for _ in range(depth_cap):
        mid = compose_slopes(alpha, beta)
        if mid == slope:
            return (alpha, beta)
        if slope < mid:
            beta = mid
        else:
            alpha = mid
    raise NotExceptionalError(f"{slope} não está na árvore até profundidade {depth_cap}")


def exc(slope: Rational, depth_cap: int = DEFAULT_DEPTH_CAP) -> ExcSlope:
    """ExcSlope com a cadeia completa de pais."""
    slope = Fraction(slope)
    path = _descend(slope, depth_cap)
    if not path:
        return ExcSlope(slope)
    alpha, beta = path
    return ExcSlope(slope, (exc(alpha, depth_cap), exc(beta, depth_cap)))


def parents(e: Union[ExcSlope, Rational]) -> Tuple[ExcSlope, ExcSlope]:
    """
    Pais (α, β) com compose(α, β) = e.

    Raises:
        NotExceptionalError: Para inclinações inteiras ou fora da árvore.
    """
    node = e if isinstance(e, ExcSlope) else exc(e)
    if node.parents is None:
        node = exc(node.slope)
    if node.parents is None:
        raise NotExceptionalError(f"Inclinação inteira {node.slope} não tem pais")
    return node.parents


def is_exceptional_slope(slope: Rational, depth_cap: int = DEFAULT_DEPTH_CAP) -> bool:
    try:
        _descend(Fraction(slope), depth_cap)
    except NotExceptionalError:
        return False
    return True


def exceptional_char(slope: Rational) -> LogChern:
    """Caráter (r, μ, ½(1 − 1/r²)) de E_slope."""
    return exc(slope).char()


def triple(e: ExcSlope) -> Tuple[ExcSlope, ExcSlope, ExcSlope]:
    """
    (α, α·β, β) para o controlador e; para e = k inteiro usa (k−1, k, k+1),
    de modo que α·(α·β) = k − ½ e (α·β)·β = k + ½.
    """
    if e.parents is None:
        k = e.slope
        return ExcSlope(k - 1), e, ExcSlope(k + 1)
    alpha, beta = e.parents
    return alpha, e, beta


def left_child(e: ExcSlope) -> ExcSlope:
    """α·(α·β) do triplo de e."""
    alpha, mid, _ = triple(e)
    if e.parents is None:
        return exc(mid.slope - Fraction(1, 2))
    return compose(alpha, mid)


def right_child(e: ExcSlope) -> ExcSlope:
    """(α·β)·β do triplo de e."""
    _, mid, beta = triple(e)
    if e.parents is None:
        return exc(mid.slope + Fraction(1, 2))
    return compose(mid, beta)


def markov_triple(alpha: ExcSlope, beta: ExcSlope) -> Tuple[int, int, int]:
    """Postos (r_α, r_{α·β}, r_β); satisfazem x² + y² + z² = 3xyz."""
    return alpha.rank, compose(alpha, beta).rank, beta.rank


def endpoint_interval(e: ExcSlope) -> EndpointInterval:
    """Intervalo de extremidades de e: meia-largura (3 − √(9 − 4/r²))/2."""
    r = e.rank
    # √(9 − 4/r²) = √(9r² − 4)/r
    half_width = Surd(Fraction(3, 2), Fraction(-1, 2 * r), 9 * r * r - 4)
    return EndpointInterval(e.slope, half_width)


def target_slope(xi: LogChern) -> Surd:
    """
    Maior μ com χ(ξ ⊗ ζ) = 0 e Δ(ζ) = ½: (−3 + √(5 + 8Δ_ξ))/2 − μ_ξ.
    """
    radicand = 5 + 8 * xi.delta
    if radicand < 0:
        raise ShapeError(f"Sem raiz real: 5 + 8Δ = {radicand} < 0")
    return Surd.sqrt(radicand) / 2 - Fraction(3, 2) - xi.mu


def controlling(xi: LogChern, depth_cap: int = DEFAULT_DEPTH_CAP) -> ExcSlope:
    """
    Fibrado excepcional controlador de ξ.

    Desce a árvore a partir do intervalo inteiro ⌊alvo⌋..⌊alvo⌋+1 até achar o
    intervalo de extremidades que contém o alvo.

    Raises:
        TreeSearchExhausted: Se o limite de profundidade é atingido.
    """
    target = target_slope(xi)
    k = target.floor()
    logger.debug("alvo %s ~ %.6f, piso %d", target, float(target), k)
    alpha, beta = ExcSlope(Fraction(k)), ExcSlope(Fraction(k + 1))
    for candidate in (alpha, beta):
        if endpoint_interval(candidate).contains(target):
            return candidate
    for depth in range(depth_cap):
        mid = compose(alpha, beta)
        if endpoint_interval(mid).contains(target):
            logger.debug("controlador %s na profundidade %d", mid, depth + 1)
            return mid
        if target < mid.slope:
            beta = mid
        else:
            alpha = mid
    raise TreeSearchExhausted(
        f"Busca do controlador esgotou a profundidade {depth_cap} para alvo ≈ {float(target):.9f}"
    )


def tree_nodes(depth: int, lo: int = 0) -> Iterator[ExcSlope]:
    """Nós estritamente entre lo e lo+1 até a profundidade dada (BFS)."""
    queue = deque([(ExcSlope(Fraction(lo)), ExcSlope(Fraction(lo + 1)), 1)])
    while queue:
        alpha, beta, level = queue.popleft()
        if level > depth:
            continue
        mid = compose(alpha, beta)
        yield mid
        queue.append((alpha, mid, level + 1))
        queue.append((mid, beta, level + 1))


def node_list(depth: int, lo: int = 0) -> List[ExcSlope]:
    return list(tree_nodes(depth, lo))
