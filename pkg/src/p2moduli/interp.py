#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Ortogonalidade cohomológica por álgebra linear exata.

Este módulo fornece:
- CokerBundle: fibrado M = coker(⊕O(a_i) → ⊕O(b_j)) com a matriz explícita
- h0_twisted: h⁰(M ⊗ I_Z), pelo modelo de fibras (pontos explícitos) ou pelo
  teste de restrição (ideais dados por geradores)
- Contagem de seções de T(2d−2) ⊗ I_Z e o veredito de ortogonalidade

Um zero obtido numa instância aleatória (semente fixa) certifica o anulamento
para o membro geral da família irredutível; sobre um corpo primo o valor é
um limite superior correto para o valor genérico.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

import numpy as np

from p2moduli.chern import LogChern, ideal_points, pairing
from p2moduli.errors import CertificateError, ShapeError
from p2moduli.exactalg import (
    Field,
    HPoly,
    Mat,
    PolyMatrix,
    PrimeField,
    hilbert_count,
    monomials,
    multiplication_matrix,
)
from p2moduli.gaeta import GradedShape
from p2moduli.points import IdealHandle, PointConfig, Subscheme, hilbert_regularity
from p2moduli.utils.serialization import fmt_q
from p2moduli.walls import tangential_interp_shape, triangular_interp_shape

logger = logging.getLogger("p2moduli.interp")

Summand = Tuple[int, int]


# -----------------------------------------------
# Fibrados dados por cokernel
# -----------------------------------------------

def _expand(terms: Iterable[Summand]) -> List[int]:
    return [t for t, m in terms for _ in range(m)]


@dataclass(frozen=True, eq=False)
class CokerBundle:
    """
    M = coker(φ), com φ uma PolyMatrix cujas linhas são os alvos O(b_j)
    (twist de linha −b_j) e as colunas as fontes O(a_i) (twist −a_i).
    """

    phi: PolyMatrix
    label: str = ""

    def __post_init__(self) -> None:
        if self.rank <= 0:
            raise ShapeError(f"Posto {self.rank} <= 0 em {self.shape()}")
        low = [a for a in self.sources if a < -2]
        if low:
            raise ShapeError(f"Twists de fonte {low} < −2 (H¹ não se anula)")

    @property
    def field(self) -> Field:
        return self.phi.field

    @property
    def sources(self) -> List[int]:
        return [-c for c in self.phi.col_twists]

    @property
    def targets(self) -> List[int]:
        return [-r for r in self.phi.row_twists]

    @property
    def rank(self) -> int:
        return len(self.targets) - len(self.sources)

    def shape(self) -> GradedShape:
        return GradedShape(
            tuple((a, 1) for a in self.sources),
            tuple((b, 1) for b in self.targets),
        )

    def class_of(self) -> LogChern:
        return self.shape().class_of()

    @classmethod
    def line_bundle(cls, fld: Field, m: int) -> "CokerBundle":
        """O(m) como cokernel da matriz vazia."""
        return cls(PolyMatrix.build(fld, [-m], [], [[]]), f"O({m})")

    @classmethod
    def general(
        cls,
        sources: Sequence[Summand],
        targets: Sequence[Summand],
        fld: Field,
        seed: int = 0,
        label: str = "",
    ) -> "CokerBundle":
        """Cokernel de um mapa aleatório ⊕O(a)^p → ⊕O(b)^q."""
        rng = np.random.default_rng(seed)
        pm = PolyMatrix.random(
            fld,
            [-b for b in _expand(targets)],
            [-a for a in _expand(sources)],
            rng,
            minimal=False,
        )
        return cls(pm, label)

    @classmethod
    def euler_tangent(cls, fld: Field, k: int) -> "CokerBundle":
        """T(k) = coker(O(k) → O(k+1)³) pela sequência de Euler."""
        x, y, z = HPoly.variables(fld)
        pm = PolyMatrix.build(fld, [-(k + 1)] * 3, [-k], [[x], [y], [z]])
        return cls(pm, f"T({k})")


def interpolating_triangular(d: int, k: int = 1, fld: Optional[Field] = None, seed: int = 0) -> CokerBundle:
    """Fibrado geral O(d−3)^{kd} → O(d−2)^{k(2d−1)}."""
    shape = triangular_interp_shape(d, k)
    return CokerBundle.general(shape.sources, shape.targets, fld or PrimeField(), seed, f"M_tri({d},{k})")


def interpolating_tangential(
    d: int,
    k: int = 1,
    fld: Optional[Field] = None,
    seed: int = 0,
    structured: bool = False,
) -> CokerBundle:
    """
    Fibrado O(2d−3)^{kd} → O(2d−1)^{k(5d−1)}.

    Na variante estruturada as primeiras colunas recebem os seis monômios
    quadráticos em blocos disjuntos de linhas e a última coluna recebe
    quádricas aleatórias.
    """
    fld = fld or PrimeField()
    shape = tangential_interp_shape(d, k)
    if not structured:
        return CokerBundle.general(shape.sources, shape.targets, fld, seed, f"M_tan({d},{k})")
    rows, cols = k * (5 * d - 1), k * d
    if 6 * (cols - 1) > rows:
        raise ShapeError(f"Variante estruturada não cabe: {cols} colunas para {rows} linhas")
    rng = np.random.default_rng(seed)
    quadrics = [HPoly.monomial(fld, e) for e in monomials(2)]
    entries: List[List[Optional[HPoly]]] = []
    for i in range(rows):
        row: List[Optional[HPoly]] = []
        for j in range(cols):
            if j == cols - 1:
                row.append(HPoly.random(fld, 2, rng))
            elif j == i // 6:
                row.append(quadrics[i - 6 * j])
            else:
                row.append(None)
        entries.append(row)
    pm = PolyMatrix.build(fld, [-(2 * d - 1)] * rows, [-(2 * d - 3)] * cols, entries)
    return CokerBundle(pm, f"M_tan({d},{k})*")


# -----------------------------------------------
# Mapas em seções globais
# -----------------------------------------------

def _section_map(phi: PolyMatrix, shift: int) -> Mat:
    """φ em graus: ⊕ R_{a_i+shift} → ⊕ R_{b_j+shift}, em blocos."""
    fld = phi.field
    row_sizes = [hilbert_count(-r + shift) for r in phi.row_twists]
    col_sizes = [hilbert_count(-c + shift) for c in phi.col_twists]
    out = fld.zeros(sum(row_sizes), sum(col_sizes))
    r0 = 0
    for i, rsize in enumerate(row_sizes):
        c0 = 0
        for j, csize in enumerate(col_sizes):
            e = phi.entry(i, j)
            if rsize and csize and not e.is_zero():
                out[r0:r0 + rsize, c0:c0 + csize] = multiplication_matrix(
                    fld, e, -phi.col_twists[j] + shift
                ).data
            c0 += csize
        r0 += rsize
    return Mat(fld, out)


def _rank(fld: Field, arr: np.ndarray) -> int:
    if arr.shape[0] == 0 or arr.shape[1] == 0:
        return 0
    return Mat(fld, arr).rank()


def _fiber_h0(M: CokerBundle, Z: PointConfig) -> int:
    """
    Seções s de ⊕O(b_j) com s(z) ∈ Im φ(z) para todo z, somadas às correções
    u_z, num único sistema; pares com s = 0 são descontados.
    """
    fld = M.field
    phi = M.phi
    q, p = phi.shape
    sizes = [hilbert_count(b) for b in M.targets]
    S = sum(sizes)
    n = Z.length
    system = fld.zeros(n * q, S + n * p)
    fiber_rank = 0
    for k, pt in enumerate(Z.points):
        offset = 0
        for j, b in enumerate(M.targets):
            row = k * q + j
            for t, e in enumerate(monomials(b)):
                system[row, offset + t] = HPoly.monomial(fld, e).evaluate(pt)
            offset += sizes[j]
        values = fld.zeros(q, p)
        for j in range(q):
            for i in range(p):
                values[j, i] = phi.entry(j, i).evaluate(pt) if not phi.entry(j, i).is_zero() else fld.zero
        system[k * q:(k + 1) * q, S + k * p:S + (k + 1) * p] = fld.reduce(-values)
        fiber_rank += _rank(fld, values)
    projected = S - _rank(fld, system) + fiber_rank
    logger.debug(f"Modelo de fibras: sistema {system.shape}, projeção {projected}")
    return projected - _rank(fld, _section_map(phi, 0).data)


def _nonzerodivisor(Z: Subscheme, r0: int, rng: np.random.Generator) -> HPoly:
    """Forma linear que não se anula em nenhum ponto de Z (teste em grau r0 + 1)."""
    fld = Z.field
    target = hilbert_count(r0 + 1)
    for _ in range(20):
        ell = HPoly.random(fld, 1, rng)
        if ell.is_zero():
            continue
        multiples = multiplication_matrix(fld, ell, r0).data.T
        ideal = Z.ideal_basis(r0 + 1)
        rows = np.vstack([multiples, ideal]) if ideal.shape[0] else multiples
        if _rank(fld, rows) == target:
            return ell
    raise CertificateError("Nenhuma forma linear aleatória evita os pontos de Z")


def _restriction_h0(M: CokerBundle, Z: Subscheme, margin: int, seed: int) -> int:
    """
    Teste de restrição: s ∈ H⁰(M) se anula em Z sse ℓ^N·s ∈ I·⊕R(b) + φ(⊕R(a))
    no grau N, com ℓ não divisor de zero e todos os twists + N acima da
    regularidade de Hilbert.
    """
    fld = M.field
    phi = M.phi
    r0 = hilbert_regularity(Z)
    twists = M.targets + M.sources
    N = max(0, r0 - min(twists)) + margin
    ell = _nonzerodivisor(Z, r0, np.random.default_rng(seed))
    power = HPoly.monomial(fld, (0, 0, 0))
    for _ in range(N):
        power = power * ell

    sizes = [hilbert_count(b) for b in M.targets]
    big = [hilbert_count(b + N) for b in M.targets]
    lift = fld.zeros(sum(big), sum(sizes))
    ideal_blocks = []
    r_off = c_off = 0
    for j, b in enumerate(M.targets):
        if sizes[j]:
            lift[r_off:r_off + big[j], c_off:c_off + sizes[j]] = multiplication_matrix(fld, power, b).data
        basis = Z.ideal_basis(b + N)
        if basis.shape[0]:
            block = fld.zeros(sum(big), basis.shape[0])
            block[r_off:r_off + big[j], :] = basis.T
            ideal_blocks.append(block)
        r_off += big[j]
        c_off += sizes[j]
    image = _section_map(phi, N).data
    W = np.hstack([image] + ideal_blocks) if ideal_blocks else image
    full = np.hstack([lift, W])
    logger.debug(f"Teste de restrição: r0={r0}, N={N}, sistema {full.shape}")
    projected = sum(sizes) - _rank(fld, full) + _rank(fld, W)
    return projected - _rank(fld, _section_map(phi, 0).data)


def h0_twisted(
    M: CokerBundle,
    Z: Union[PointConfig, IdealHandle, Subscheme],
    model: str = "auto",
    twist_margin: int = 0,
    seed: int = 0,
) -> int:
    """
    h⁰(M ⊗ I_Z).

    Args:
        M: Fibrado dado por cokernel.
        Z: Pontos explícitos ou ideal dado por geradores.
        model: "fiber", "restriction" ou "auto" (fibras quando há pontos).
        twist_margin: Twist extra no teste de restrição.
        seed: Semente da forma linear do teste de restrição.

    Raises:
        ShapeError: Corpos diferentes ou modelo desconhecido.
    """
    M.field.check_same(Z.field)
    if model == "auto":
        model = "fiber" if isinstance(Z, PointConfig) else "restriction"
    if model == "fiber":
        if not isinstance(Z, PointConfig):
            raise ShapeError("O modelo de fibras exige pontos explícitos")
        value = _fiber_h0(M, Z)
    elif model == "restriction":
        value = _restriction_h0(M, Z, twist_margin, seed)
    else:
        raise ShapeError(f"Modelo desconhecido: {model}")
    if isinstance(M.field, PrimeField):
        logger.debug(f"h⁰ = {value} sobre GF({M.field.p}): limite superior do valor genérico")
    return value


def tangent_section_count(Z: Subscheme, d: int, **kwargs: Any) -> int:
    """h⁰(T(2d−2) ⊗ I_Z) pela apresentação de Euler."""
    return h0_twisted(CokerBundle.euler_tangent(Z.field, 2 * d - 2), Z, **kwargs)


def euler_of_pair(M: CokerBundle, Z: Subscheme) -> Fraction:
    """χ(M ⊗ I_Z) a partir das classes."""
    return pairing(M.class_of(), ideal_points(Z.length))


class Verdict(NamedTuple):
    kind: str  # "orthogonal", "fails_h0" ou "chi_nonzero"
    value: Optional[Fraction] = None

    def __str__(self) -> str:
        if self.kind == "orthogonal":
            return "orthogonal"
        return f"{self.kind}({fmt_q(self.value)})"


def check_orthogonal(M: CokerBundle, Z: Subscheme, **kwargs: Any) -> Verdict:
    """
    Decide se M é cohomologicamente ortogonal a I_Z.

    χ = 0 é exato; h² = 0 vem de H²(⊕I_Z(b_j)) = 0 quando todo b_j >= −2;
    h⁰ é calculado e h¹ = h⁰ + h² − χ.

    Raises:
        CertificateError: Se algum b_j < −2 (h² não certificado).
    """
    chi = euler_of_pair(M, Z)
    if chi != 0:
        return Verdict("chi_nonzero", chi)
    low = [b for b in M.targets if b < -2]
    if low:
        raise CertificateError(f"h² não certificado: twists de alvo {low} < −2")
    h0 = h0_twisted(M, Z, **kwargs)
    if h0:
        return Verdict("fails_h0", Fraction(h0))
    return Verdict("orthogonal")
