#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Combinatória de resoluções em P².

Este módulo calcula:
- Grau mínimo de curva e expoentes de Gaeta para ideais de n pontos
- Classificação pura (triangular / tangencial) e tabelas de Betti divisoriais
- Resoluções de Gaeta generalizadas em fibrados excepcionais
- A decomposição em blocos de fibrados de linha do cone de mapeamento
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, NamedTuple, Optional, Tuple

from p2moduli.chern import (
    LogChern,
    ch_add,
    euler,
    euler_ch,
    euler_pair,
    ideal_points,
    line,
    tangent,
    twist,
)
from p2moduli.errors import (
    ConservationError,
    NegativeExponentError,
    NotPureError,
    ShapeError,
)
from p2moduli.exceptional import (
    DEFAULT_DEPTH_CAP,
    ExcSlope,
    controlling,
    exc,
    left_child,
    right_child,
    triple,
)
from p2moduli.utils.serialization import fmt_map, fmt_q, summands_json

logger = logging.getLogger("p2moduli.gaeta")

ChVector = Tuple[Fraction, Fraction, Fraction]
Summand = Tuple[int, int]


def binom2(m: int) -> int:
    """C(m, 2), nulo para m < 2."""
    return m * (m - 1) // 2 if m >= 2 else 0


def line_ch(t: int, mult: int = 1) -> ChVector:
    """ch(O(t)^mult) = mult·(1, t, t²/2)."""
    return Fraction(mult), Fraction(mult * t), Fraction(mult * t * t, 2)


def _normalize(terms: Iterable[Summand]) -> Tuple[Summand, ...]:
    acc: Dict[int, int] = {}
    for t, mult in terms:
        if mult < 0:
            raise NegativeExponentError(f"Multiplicidade negativa {mult} em O({t})")
        acc[int(t)] = acc.get(int(t), 0) + int(mult)
    return tuple(sorted((t, m) for t, m in acc.items() if m > 0))


@dataclass(frozen=True)
class GradedShape:
    """
    Os dois termos de uma resolução ⊕O(t)^m → ⊕O(t')^m' (fontes → alvos).

    Twists repetidos em cada lado são somados; multiplicidades nulas somem.
    """

    sources: Tuple[Summand, ...] = ()
    targets: Tuple[Summand, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "sources", _normalize(self.sources))
        object.__setattr__(self, "targets", _normalize(self.targets))

    @classmethod
    def of(
        cls,
        sources: Iterable[Summand],
        targets: Iterable[Summand],
        resolves: Optional[LogChern] = None,
    ) -> "GradedShape":
        """Constrói e, se `resolves` é dado, verifica a conservação."""
        shape = cls(tuple(sources), tuple(targets))
        if resolves is not None:
            shape.check_conservation(resolves)
        return shape

    def ch(self) -> ChVector:
        """Σ_alvos ch − Σ_fontes ch."""
        pos = [line_ch(t, m) for t, m in self.targets]
        neg = [line_ch(t, -m) for t, m in self.sources]
        return ch_add(*pos, *neg)

    @property
    def rank(self) -> int:
        return sum(m for _, m in self.targets) - sum(m for _, m in self.sources)

    def class_of(self) -> LogChern:
        """Classe do conúcleo (posto não nulo)."""
        return LogChern.from_ch(*self.ch())

    def check_conservation(self, xi: LogChern) -> None:
        if self.ch() != xi.ch():
            raise ConservationError(
                f"Forma {self} não conserva a classe {xi}: {self.ch()} ≠ {xi.ch()}"
            )

    def twists(self) -> List[int]:
        return sorted({t for t, _ in self.sources} | {t for t, _ in self.targets})

    def is_pure(self) -> bool:
        """Exatamente dois twists distintos no total."""
        return len(self.twists()) == 2

    def direct_sum(self, other: "GradedShape") -> "GradedShape":
        return GradedShape(self.sources + other.sources, self.targets + other.targets)

    def twist_by(self, k: int) -> "GradedShape":
        return GradedShape(
            tuple((t + k, m) for t, m in self.sources),
            tuple((t + k, m) for t, m in self.targets),
        )

    def is_empty(self) -> bool:
        return not self.sources and not self.targets

    def to_json(self) -> Dict[str, List[List[int]]]:
        return {"sources": summands_json(self.sources), "targets": summands_json(self.targets)}

    def __str__(self) -> str:
        return fmt_map(self.sources, self.targets)


# -----------------------------------------------
# Gaeta para ideais de pontos
# -----------------------------------------------

def min_curve_degree(n: int) -> int:
    """Único d com C(d+1, 2) <= n < C(d+2, 2)."""
    if n <= 0:
        raise ShapeError(f"n deve ser positivo, recebido {n}")
    d = 0
    while binom2(d + 2) <= n:
        d += 1
    return d


class GaetaExponents(NamedTuple):
    n1: int
    n2: int
    n3: int
    shape: GradedShape


def gaeta_exponents(n: int) -> GaetaExponents:
    """
    Expoentes de Gaeta de I_Z, |Z| = n.

    Returns:
        GaetaExponents: (n1, n2, n3, forma) com n1 = C(d+2,2) − n,
        n2 = d(d+2) − 2n e n3 = C(d+1,2) − n.
    """
    d = min_curve_degree(n)
    if n <= 2:
        logger.warning("n=%d está abaixo do caso de Picard posto 2", n)
    n1 = binom2(d + 2) - n
    n2 = d * (d + 2) - 2 * n
    n3 = binom2(d + 1) - n
    if n2 >= 0:
        shape = GradedShape.of([(-d - 2, -n3), (-d - 1, n2)], [(-d, n1)], ideal_points(n))
    else:
        shape = GradedShape.of([(-d - 2, -n3)], [(-d - 1, -n2), (-d, n1)], ideal_points(n))
    return GaetaExponents(n1, n2, n3, shape)


class PureClass(NamedTuple):
    kind: str  # "triangular", "tangential" ou "not_pure"
    d: Optional[int]
    tangential_witness: Optional[int] = None

    def __str__(self) -> str:
        if self.kind == "not_pure":
            return "NotPure"
        label = "Triangular" if self.kind == "triangular" else "Tangential"
        return f"{label}({self.d})"


def _triangular_index(n: int) -> Optional[int]:
    d = 1
    while d * (d + 1) // 2 < n:
        d += 1
    return d if d * (d + 1) // 2 == n else None


def _tangential_index(n: int) -> Optional[int]:
    d = 1
    while 2 * d * (d + 1) < n:
        d += 1
    return d if 2 * d * (d + 1) == n else None


def classify_pure(n: int) -> PureClass:
    """Triangular(d) se n = d(d+1)/2, Tangential(d) se n = 2d(d+1), senão NotPure."""
    if n <= 0:
        raise ShapeError(f"n deve ser positivo, recebido {n}")
    tri, tan = _triangular_index(n), _tangential_index(n)
    if tri is not None:
        return PureClass("triangular", tri, tan)
    if tan is not None:
        return PureClass("tangential", tan)
    return PureClass("not_pure", None)


def divisorial_betti(n: int) -> GradedShape:
    """
    Tabela de Betti divisorial de n triangular (d > 2) ou tangencial.

    Raises:
        NotPureError: Se n não é puro ou se o triangular tem d <= 2.
    """
    pure = classify_pure(n)
    if pure.kind == "not_pure":
        raise NotPureError(f"n={n} não é triangular nem tangencial")
    d = pure.d
    assert d is not None
    if pure.kind == "triangular":
        if d <= 2:
            raise NotPureError(f"Tabela divisorial triangular exige d > 2 (d={d})")
        return GradedShape.of(
            [(-d - 2, 1), (-d - 1, d - 3)],
            [(-d, d - 2), (-d + 1, 1)],
            ideal_points(n),
        )
    return qk_shape(d, 1)


def qk_shape(d: int, k: int) -> GradedShape:
    """O(−2d−2)^d ⊕ O(−2d−1)^k → O(−2d−1)^k ⊕ O(−2d)^{d+1}, k <= d."""
    if d < 1 or not 0 <= k <= d:
        raise ShapeError(f"Família qk exige d >= 1 e 0 <= k <= d (d={d}, k={k})")
    return GradedShape.of(
        [(-2 * d - 2, d), (-2 * d - 1, k)],
        [(-2 * d - 1, k), (-2 * d, d + 1)],
        ideal_points(2 * d * (d + 1)),
    )


def zero_locus_shape(d: int) -> GradedShape:
    """Lugar de zeros de uma seção de T(2d−2): O(−4d+1) ⊕ O(−2d−1) → O(−2d)³."""
    if d < 1:
        raise ShapeError(f"d deve ser >= 1, recebido {d}")
    return GradedShape.of(
        [(-4 * d + 1, 1), (-2 * d - 1, 1)],
        [(-2 * d, 3)],
        ideal_points(zero_locus_length(d)),
    )


def zero_locus_length(d: int) -> int:
    return 4 * d * d - 2 * d + 1


def residual_length(d: int) -> int:
    """δ = 2d² − 4d + 1."""
    return 2 * d * d - 4 * d + 1


# -----------------------------------------------
# Decomposição de Beilinson
# -----------------------------------------------

def beilinson_coefficients(xi: LogChern, d: int) -> Tuple[Fraction, Fraction, Fraction]:
    """
    Coeficientes de ξ na base {O(−d−2), O(−d−1), O(−d)}, lidos pela coleção
    dual {O(−d+1), T(−d−1), O(−d)}.
    """
    a = euler_pair(line(-d + 1), xi)
    b = -euler_pair(tangent(-d - 1), xi)
    c = euler_pair(line(-d), xi)
    return a, b, c


def beilinson_shape(xi: LogChern, d: int) -> GradedShape:
    """Coeficientes negativos viram fontes, positivos viram alvos."""
    return _ch_shape(xi.ch(), d)


def gaeta_frame(xi: LogChern) -> int:
    """Maior d com χ(ξ(d−1)) <= 0; para ideais de pontos é o grau mínimo de curva."""
    t = math.floor(-xi.mu - Fraction(3, 2))
    if euler(twist(xi, t)) > 0:
        raise ShapeError(f"χ(ξ(t)) > 0 para todo t; {xi} não tem resolução de Gaeta")
    while euler(twist(xi, t + 1)) <= 0:
        t += 1
    return t + 1


def gaeta_shape_of(xi: LogChern) -> GradedShape:
    """Resolução de Gaeta de uma classe de feixe geral."""
    d = gaeta_frame(xi)
    shape = beilinson_shape(xi, d)
    if any(t == -d for t, _ in shape.sources) or any(t == -d - 2 for t, _ in shape.targets):
        raise NegativeExponentError(f"{xi} não tem forma de Gaeta no quadro d={d}")
    return shape


def exceptional_resolution(slope: Fraction) -> GradedShape:
    """Resolução de E_slope em três twists consecutivos (quadro d = ⌈−slope⌉)."""
    e = exc(slope)
    d = math.ceil(-e.slope)
    shape = beilinson_shape(e.char(), d)
    shape.check_conservation(e.char())
    return shape


# -----------------------------------------------
# Gaeta generalizada
# -----------------------------------------------

def exc_name(slope: Fraction) -> str:
    """O(k) para inteiros, T(j) para meio-inteiros, E_{s} caso contrário."""
    slope = Fraction(slope)
    if slope.denominator == 1:
        return f"O({slope.numerator})"
    if slope.denominator == 2:
        return f"T({slope - Fraction(3, 2)})"
    return f"E_{{{fmt_q(slope)}}}"


@dataclass(frozen=True)
class ExcSummand:
    """E_slope^mult."""

    slope: Fraction
    mult: int

    def char(self) -> LogChern:
        return exc(self.slope).char()

    def ch(self) -> ChVector:
        r, c1, c2 = self.char().ch()
        return r * self.mult, c1 * self.mult, c2 * self.mult

    def __str__(self) -> str:
        name = exc_name(self.slope)
        return name if self.mult == 1 else f"{name}^{self.mult}"


@dataclass(frozen=True)
class GenGaeta:
    """Resolução de Gaeta generalizada com o sinal de χ(E_{−(α·β)}, ξ)."""

    xi: LogChern
    sign: str  # "positive", "zero" ou "negative"
    controlling: ExcSlope
    alpha: Fraction
    beta: Fraction
    m1: int
    m2: int
    m3: int
    sources: Tuple[ExcSummand, ...] = field(default_factory=tuple)
    targets: Tuple[ExcSummand, ...] = field(default_factory=tuple)

    def ch(self) -> ChVector:
        return ch_add(
            *(s.ch() for s in self.targets),
            *((-a, -b, -c) for a, b, c in (s.ch() for s in self.sources)),
        )

    def to_json(self) -> Dict[str, object]:
        return {
            "sign": self.sign,
            "controlling": fmt_q(self.controlling.slope),
            "alpha": fmt_q(self.alpha),
            "beta": fmt_q(self.beta),
            "exponents": {"m1": self.m1, "m2": self.m2, "m3": self.m3},
            "sources": [{"slope": fmt_q(s.slope), "mult": s.mult} for s in self.sources],
            "targets": [{"slope": fmt_q(s.slope), "mult": s.mult} for s in self.targets],
        }

    def __str__(self) -> str:
        src = " ⊕ ".join(str(s) for s in self.sources) or "0"
        tgt = " ⊕ ".join(str(s) for s in self.targets) or "0"
        return f"{src} → {tgt}"


def _as_int(value: Fraction, label: str) -> int:
    if value.denominator != 1:
        raise ConservationError(f"Expoente {label} não inteiro: {value}")
    if value < 0:
        raise NegativeExponentError(f"Expoente {label} negativo: {value}")
    return int(value)


def generalized_gaeta(xi: LogChern, depth_cap: int = DEFAULT_DEPTH_CAP) -> GenGaeta:
    """
    Resolução de Gaeta generalizada de ξ.

    O sinal de χ(E_{−(α·β)}, ξ) escolhe a forma; no caso nulo os expoentes
    saem da conservação (duas incógnitas, três equações).

    Raises:
        NegativeExponentError: Se algum expoente fica negativo.
        ConservationError: Se a soma alternada não reproduz ξ.
    """
    e = controlling(xi, depth_cap)
    alpha, mid, beta = triple(e)
    a, ab, b = alpha.slope, mid.slope, beta.slope
    chi_mid = euler_pair(exc(-ab).char(), xi)

    if chi_mid > 0:
        sign = "positive"
        m1 = _as_int(chi_mid, "m1")
        m2 = _as_int(-euler_pair(exc(-left_child(e).slope).char(), xi), "m2")
        m3 = _as_int(-euler_pair(exc(-a).char(), xi), "m3")
        sources = (ExcSummand(-a - 3, m3),)
        targets = (ExcSummand(-b, m2), ExcSummand(-ab, m1))
    elif chi_mid < 0:
        sign = "negative"
        m1 = _as_int(-chi_mid, "m1")
        m2 = _as_int(euler_pair(exc(-b).char(), xi), "m2")
        m3 = _as_int(euler_pair(exc(-right_child(e).slope).char(), xi), "m3")
        sources = (ExcSummand(-ab - 3, m1), ExcSummand(-a - 3, m3))
        targets = (ExcSummand(-b, m2),)
    else:
        sign = "zero"
        m1 = 0
        m2, m3 = _zero_case_exponents(xi, -b, -a - 3)
        sources = (ExcSummand(-a - 3, m3),)
        targets = (ExcSummand(-b, m2),)

    result = GenGaeta(
        xi,
        sign,
        e,
        a,
        b,
        m1,
        m2,
        m3,
        tuple(s for s in sources if s.mult),
        tuple(t for t in targets if t.mult),
    )
    if result.ch() != xi.ch():
        raise ConservationError(f"Gaeta generalizada {result} não conserva {xi}")
    logger.debug("Gaeta generalizada de %s: %s (%s)", xi, result, sign)
    return result


def _zero_case_exponents(xi: LogChern, target_slope: Fraction, source_slope: Fraction) -> Tuple[int, int]:
    """Resolve m2·E_t − m3·E_s = ξ em (posto, ch₁) e confere ch₂."""
    rt, ct, qt = exc(target_slope).char().ch()
    rs, cs, qs = exc(source_slope).char().ch()
    r, c, q = xi.ch()
    det = rt * (-cs) - (-rs) * ct
    if det == 0:
        raise ConservationError("Sistema de conservação degenerado")
    m2 = (r * (-cs) - (-rs) * c) / det
    m3 = (rt * c - ct * r) / det
    if m2 * qt - m3 * qs != q:
        raise ConservationError(f"Sistema sobredeterminado inconsistente para {xi}")
    return _as_int(m2, "m2"), _as_int(m3, "m3")


# -----------------------------------------------
# Blocos do cone de mapeamento
# -----------------------------------------------

@dataclass(frozen=True)
class ConeBlocks:
    """Bloco admissível F (F₋₁ → F₀) e complexo residual W (W₀ → W₁) num quadro d."""

    frame: int
    f_block: GradedShape
    residual: GradedShape

    @property
    def f_minus1(self) -> Tuple[Summand, ...]:
        return self.f_block.sources

    @property
    def f_zero(self) -> Tuple[Summand, ...]:
        return self.f_block.targets

    @property
    def w_zero(self) -> Tuple[Summand, ...]:
        return self.residual.sources

    @property
    def w_one(self) -> Tuple[Summand, ...]:
        return self.residual.targets

    def total(self) -> GradedShape:
        return self.f_block.direct_sum(self.residual)

    def to_json(self) -> Dict[str, object]:
        return {
            "frame": self.frame,
            "F": self.f_block.to_json(),
            "W": self.residual.to_json(),
        }


def _ch_shape(vec: ChVector, d: int) -> GradedShape:
    """Decomposição de Beilinson de um vetor de Chern (posto possivelmente nulo)."""
    r, c1, c2 = vec
    coeffs = []
    for g in (line(-d + 1), tangent(-d - 1), line(-d)):
        gr, gc, gq = g.dual().ch()
        # χ(g* ⊗ v) via Riemann-Roch no produto de caracteres
        prod = (gr * r, gr * c1 + gc * r, gr * c2 + gc * c1 + gq * r)
        coeffs.append(euler_ch(*prod))
    coeffs[1] = -coeffs[1]
    sources, targets = [], []
    for t, coeff in zip((-d - 2, -d - 1, -d), coeffs):
        if coeff.denominator != 1:
            raise ConservationError(f"Coeficiente não inteiro {coeff} em O({t})")
        if coeff < 0:
            sources.append((t, int(-coeff)))
        elif coeff > 0:
            targets.append((t, int(coeff)))
    return GradedShape(tuple(sources), tuple(targets))


def mapping_cone_blocks(xi: LogChern, depth_cap: int = DEFAULT_DEPTH_CAP) -> ConeBlocks:
    """
    Blocos F₋₁, F₀, W₀, W₁ do cone de mapeamento no quadro de Gaeta de ξ.

    F é a parte admissível e W = ξ − F o complexo residual:

    - positivo: F = E_{−(α·β)}^{m1}, W = E_{−α−3}^{m3} → E_{−β}^{m2};
    - nulo: F = E_{−β}^{m2}, W = E_{−α−3}^{m3} em grau de fonte;
    - negativo: F é o cone E_{−α−3}^{m3} → E_{−β}^{m2} e W = E_{−(α·β)−3}^{m1}
      em grau de fonte.

    As chaves "F" e "W" de `to_json` seguem essa convenção nos três casos.

    Os blocos saem da decomposição de Beilinson das classes de F e de W nos
    twists O(−d−2), O(−d−1), O(−d) do quadro d, sem separar μ_E ∈ [0, ½) de
    μ_E ∈ [½, 1). A decomposição de uma classe num quadro fixo é única, logo
    coincide com a resolução por fibrados em linha de cada caso; a soma dos
    blocos é conferida contra a resolução de Gaeta.

    Raises:
        ConservationError: Se W₀ ⊕ F₋₁ → W₁ ⊕ F₀ não é a resolução de Gaeta.
    """
    gg = generalized_gaeta(xi, depth_cap)
    d = gaeta_frame(xi)
    if gg.sign == "positive":
        f_vec = ExcSummand(-gg.controlling.slope, gg.m1).ch()
    elif gg.sign == "zero":
        f_vec = ExcSummand(-gg.beta, gg.m2).ch()
    else:
        pos = ExcSummand(-gg.beta, gg.m2).ch()
        neg = ExcSummand(-gg.alpha - 3, gg.m3).ch()
        f_vec = ch_add(pos, tuple(-x for x in neg))  # type: ignore[arg-type]
    w_vec = ch_add(xi.ch(), tuple(-x for x in f_vec))  # type: ignore[arg-type]

    blocks = ConeBlocks(d, _ch_shape(f_vec, d), _ch_shape(w_vec, d))
    gaeta = gaeta_shape_of(xi)
    if blocks.total() != gaeta:
        raise ConservationError(
            f"Blocos {blocks.f_block} + {blocks.residual} não reproduzem Gaeta {gaeta}"
        )
    return blocks
