#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Paredes de Bridgeland e raios extremais de cones de divisores.

Este módulo fornece:
- Centro x de uma parede W_x e a correspondência μ(D) = −x − 3/2
- Inclinação do conúcleo de uma resolução
- Raios extremais dos cones efetivo e móvel
- As tabelas SBLD embutidas, reverificadas linha a linha ao serem carregadas
"""

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from p2moduli import sbld_data
from p2moduli.chern import (
    THREE_HALVES,
    CurveClass,
    DivisorClass,
    LogChern,
    ideal_points,
    line,
    pairing,
    tangent,
    twist,
)
from p2moduli.errors import (
    ConservationError,
    EqualSlopesError,
    NotPureError,
    ShapeError,
    UnsupportedTableError,
)
from p2moduli.exceptional import DEFAULT_DEPTH_CAP, exceptional_char
from p2moduli.gaeta import GradedShape, classify_pure, exc_name, generalized_gaeta
from p2moduli.utils.serialization import fmt_q, parse_q, q_json, tsv

logger = logging.getLogger("p2moduli.walls")


@dataclass(frozen=True, order=True)
class WallCenter:
    """Centro x da parede semicircular W_x."""

    x: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", Fraction(self.x))

    def is_realized_for(self, n: int) -> bool:
        """Raio ao quadrado x² − 2n não negativo para ideais de n pontos."""
        return self.x < 0 and self.x * self.x >= 2 * n

    def __str__(self) -> str:
        return fmt_q(self.x)


def wall_center(xi: LogChern, zeta: LogChern) -> WallCenter:
    """
    Centro da parede onde ζ desestabiliza ξ.

    x = (ch₂(ξ)r(ζ) − ch₂(ζ)r(ξ)) / (ch₁(ξ)r(ζ) − ch₁(ζ)r(ξ)).

    Raises:
        EqualSlopesError: Se as classes reduzidas são proporcionais em (r, ch₁).
    """
    den = xi.ch1 * zeta.r - zeta.ch1 * xi.r
    if den == 0:
        raise EqualSlopesError(f"Sem parede: {xi} e {zeta} têm a mesma inclinação")
    return WallCenter((xi.ch2 * zeta.r - zeta.ch2 * xi.r) / den)


def slope_from_center(x: WallCenter) -> Fraction:
    return -x.x - THREE_HALVES


def coker_slope(shape: GradedShape) -> Fraction:
    """
    Inclinação da classe do conúcleo de uma resolução.

    Raises:
        ShapeError: Se posto(alvos) − posto(fontes) <= 0.
    """
    if shape.rank <= 0:
        raise ShapeError(f"Conúcleo de {shape} tem posto {shape.rank} <= 0")
    c1 = sum(t * m for t, m in shape.targets) - sum(t * m for t, m in shape.sources)
    return Fraction(c1, shape.rank)


# -----------------------------------------------
# Nomes de objetos desestabilizadores
# -----------------------------------------------

_OBJECT = re.compile(
    r"^(?:(?P<kind>O|T|I_(?P<k>\d+))(?:\((?P<twist>[+-]?\d+)\))?"
    r"|E_\{(?P<slope>[^}]+)\}"
    r"|\((?P<r>[^,]+),(?P<mu>[^,]+),(?P<delta>[^)]+)\))"
    r"(?:\^(?P<power>\d+))?$"
)


def parse_object(name: str) -> LogChern:
    """
    Caráter de um objeto pelo nome: O(k), T(k), I_m(k), E_{s} ou (r,μ,Δ),
    com potência opcional ^m.

    Raises:
        ShapeError: Se o nome não é reconhecido.
    """
    match = _OBJECT.match(name.replace(" ", "").replace("−", "-"))
    if not match:
        raise ShapeError(f"Objeto desconhecido: {name!r}")
    groups = match.groupdict()
    if groups["slope"] is not None:
        char = exceptional_char(parse_q(groups["slope"]))
    elif groups["r"] is not None:
        char = LogChern(parse_q(groups["r"]), parse_q(groups["mu"]), parse_q(groups["delta"]))
    else:
        k = int(groups["twist"] or 0)
        if groups["kind"] == "O":
            char = line(k)
        elif groups["kind"] == "T":
            char = tangent(k)
        else:
            char = twist(ideal_points(int(groups["k"])), k)
    power = int(groups["power"] or 1)
    return char.scale(power) if power != 1 else char


# -----------------------------------------------
# Cones de divisores
# -----------------------------------------------

def destabilizer_of(n: int, depth_cap: int = DEFAULT_DEPTH_CAP) -> Tuple[str, LogChern]:
    """
    Objeto F do bloco admissível da Gaeta generalizada de I_n: E_{−(α·β)}^{m1}
    no caso positivo, E_{−β}^{m2} no nulo e [E_{−α−3}^{m3} → E_{−β}^{m2}] no negativo.
    """
    gg = generalized_gaeta(ideal_points(n), depth_cap)
    if gg.sign == "positive":
        mid = gg.controlling.slope
        return f"{exc_name(-mid)}^{gg.m1}", exceptional_char(-mid).scale(gg.m1)
    top = exceptional_char(-gg.beta).scale(gg.m2)
    if gg.sign == "zero":
        return f"{exc_name(-gg.beta)}^{gg.m2}", top
    bottom = exceptional_char(-gg.alpha - 3).scale(gg.m3)
    name = f"[{exc_name(-gg.alpha - 3)}^{gg.m3} → {exc_name(-gg.beta)}^{gg.m2}]"
    return name, top - bottom


def eff_extremal(n: int, depth_cap: int = DEFAULT_DEPTH_CAP) -> DivisorClass:
    """Raio extremal primário de Eff(P^{2[n]}): μ = −x(F) − 3/2."""
    if n < 2:
        raise ShapeError(f"Cone efetivo exige n >= 2, recebido {n}")
    name, char = destabilizer_of(n, depth_cap)
    mu = slope_from_center(wall_center(ideal_points(n), char))
    logger.debug("Eff(n=%d): desestabilizador %s, μ = %s", n, name, mu)
    return DivisorClass.from_slope(mu)


def movable_extremal(n: int) -> DivisorClass:
    """
    Raio extremal primário de Mov(P^{2[n]}) para n triangular ou tangencial.

    Raises:
        NotPureError: Se n não é puro ou d está abaixo do limite da fórmula.
    """
    pure = classify_pure(n)
    d = pure.d
    if pure.kind == "triangular":
        assert d is not None
        if d < 2:
            raise NotPureError(f"Fórmula triangular exige d >= 2 (d={d})")
        return DivisorClass.from_slope(Fraction(d * d - 2 * d + 2, d - 1))
    if pure.kind == "tangential":
        assert d is not None
        if d < 2:
            raise NotPureError(f"Fórmula tangencial exige d >= 2 (d={d})")
        return DivisorClass.from_slope(Fraction(8 * d * d - 4 * d + 1, 4 * d - 1))
    raise NotPureError(f"n={n} não é triangular nem tangencial")


def tangential_curve_numbers(d: int) -> CurveClass:
    """Curva β com β·H = 4d − 1 e β·½B = 8d² − 4d + 1."""
    if d < 2:
        raise ShapeError(f"Números da curva tangencial exigem d >= 2 (d={d})")
    return CurveClass(Fraction(4 * d - 1), Fraction(8 * d * d - 4 * d + 1))


def eff_edge_triangular(d: int) -> DivisorClass:
    """(d−1)H − ½B, o raio efetivo para n = d(d+1)/2."""
    return DivisorClass.from_slope(d - 1)


def kernel_bundle_invariants(d: int) -> LogChern:
    """Fibrado núcleo de posto 3 da resolução especial k=2."""
    return LogChern(3, Fraction(2 - 8 * d, 3), Fraction(2 * d * d - 10 * d + 5, 9))


def triangular_interp_shape(d: int, k: int = 1) -> GradedShape:
    """O(d−3)^{kd} → O(d−2)^{k(2d−1)}."""
    if d < 2 or k < 1:
        raise ShapeError(f"Forma triangular exige d >= 2 e k >= 1 (d={d}, k={k})")
    return GradedShape(((d - 3, k * d),), ((d - 2, k * (2 * d - 1)),))


def tangential_interp_shape(d: int, k: int = 1) -> GradedShape:
    """O(2d−3)^{kd} → O(2d−1)^{k(5d−1)}."""
    if d < 1 or k < 1:
        raise ShapeError(f"Forma tangencial exige d >= 1 e k >= 1 (d={d}, k={k})")
    return GradedShape(((2 * d - 3, k * d),), ((2 * d - 1, k * (5 * d - 1)),))


def slope_of_interp_triangular(d: int, k: int = 1) -> Fraction:
    return coker_slope(triangular_interp_shape(d, k))


def slope_of_interp_tangential(d: int, k: int = 1) -> Fraction:
    return coker_slope(tangential_interp_shape(d, k))


# -----------------------------------------------
# Tabelas SBLD
# -----------------------------------------------

@dataclass(frozen=True)
class SbldRow:
    """Uma linha do programa de decomposição: sizígias → V → Bs(D_V)."""

    n: int
    geometry: str
    betti_id: str
    betti: GradedShape
    destab_name: str
    destab: LogChern
    interp_name: str
    interp: GradedShape
    base_locus: Tuple[str, ...]
    mu: Fraction
    dashed: bool = False
    note: str = ""

    @property
    def wall(self) -> WallCenter:
        return wall_center(ideal_points(self.n), self.destab)

    def to_json(self) -> Dict[str, Any]:
        return {
            "geometry": self.geometry,
            "betti": self.betti_id,
            "destab": {
                "name": self.destab_name,
                "r": fmt_q(self.destab.r),
                "c1": fmt_q(self.destab.ch1),
                "ch2": fmt_q(self.destab.ch2),
            },
            "interp": {"name": self.interp_name, **self.interp.to_json()},
            "mu": q_json(self.mu),
            "wall_center": q_json(self.wall.x),
            "base_locus": list(self.base_locus),
            "dashed": self.dashed,
        }


@dataclass(frozen=True)
class WallEntry:
    center: WallCenter
    destabs: Tuple[Tuple[str, LogChern], ...]

    def to_json(self) -> Dict[str, Any]:
        return {
            "center": q_json(self.center.x),
            "destabs": [name for name, _ in self.destabs],
        }


@dataclass(frozen=True)
class SbldTable:
    n: int
    betti: Dict[str, GradedShape]
    rows: Tuple[SbldRow, ...]
    walls: Tuple[WallEntry, ...]

    def betti_id(self, shape: GradedShape) -> Optional[str]:
        """Rótulo (G, G_1, ...) da tabela de Betti igual a `shape`, se houver."""
        return next((key for key, known in self.betti.items() if known == shape), None)

    def to_json(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "betti": {key: shape.to_json() for key, shape in self.betti.items()},
            "rows": [row.to_json() for row in self.rows],
            "walls": [wall.to_json() for wall in self.walls],
        }

    def to_tsv(self) -> str:
        header = ["geometry", "betti", "destab", "interp", "base_locus", "mu", "wall_center"]
        body: List[List[Any]] = [
            [
                ("- " if row.dashed else "") + row.geometry,
                row.betti_id,
                row.destab_name,
                str(row.interp),
                " ∪ ".join(row.base_locus) or "∅",
                row.mu,
                row.wall.x,
            ]
            for row in self.rows
        ]
        return tsv([header] + body)

    def walls_tsv(self) -> str:
        body: List[List[Any]] = [
            [wall.center.x, ", ".join(name for name, _ in wall.destabs)] for wall in self.walls
        ]
        return tsv([["center", "destabs"]] + body)


def _check(condition: bool, message: str) -> None:
    if not condition:
        raise ConservationError(message)


def _build_row(n: int, betti: Dict[str, GradedShape], spec: sbld_data.RowSpec) -> SbldRow:
    xi = ideal_points(n)
    interp = GradedShape(spec.sources, spec.targets)
    row = SbldRow(
        n=n,
        geometry=spec.geometry,
        betti_id=spec.betti,
        betti=betti[spec.betti],
        destab_name=spec.destab,
        destab=parse_object(spec.destab),
        interp_name=spec.interp_name,
        interp=interp,
        base_locus=spec.base_locus,
        mu=parse_q(spec.mu),
        dashed=spec.dashed,
        note=spec.note,
    )
    label = f"n={n}, {spec.geometry}"
    chi = pairing(interp.class_of(), xi)
    _check(chi == 0, f"{label}: χ(V ⊗ I_n) = {chi} ≠ 0")
    _check(coker_slope(interp) == row.mu, f"{label}: inclinação {coker_slope(interp)} ≠ μ {row.mu}")
    from_wall = slope_from_center(row.wall)
    _check(from_wall == row.mu, f"{label}: −x − 3/2 = {from_wall} ≠ μ {row.mu}")
    return row


def sbld_table(n: int) -> SbldTable:
    """
    Tabela SBLD de n com todas as verificações refeitas.

    Raises:
        UnsupportedTableError: Para n fora de {3, 4, 5, 6, 7, 8, 12}.
        ConservationError: Se algum dado embutido falha uma verificação.
    """
    if n not in sbld_data.SUPPORTED:
        raise UnsupportedTableError(
            f"Sem tabela para n={n}; suportados: {', '.join(map(str, sbld_data.SUPPORTED))}"
        )
    xi = ideal_points(n)
    betti = {}
    for key, (sources, targets) in sbld_data.BETTI[n].items():
        betti[key] = GradedShape.of(sources, targets, xi)

    rows = tuple(_build_row(n, betti, spec) for spec in sbld_data.ROWS[n])

    walls = []
    for spec in sbld_data.WALLS[n]:
        center = WallCenter(parse_q(spec.center))
        destabs = tuple((name, parse_object(name)) for name in spec.destabs)
        for name, char in destabs:
            got = wall_center(xi, char)
            _check(got == center, f"n={n}: {name} dá centro {got}, listado {center}")
        walls.append(WallEntry(center, destabs))

    logger.debug("tabela n=%d: %d linhas, %d paredes verificadas", n, len(rows), len(walls))
    return SbldTable(n, betti, rows, tuple(walls))
