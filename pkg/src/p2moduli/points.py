#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Configurações explícitas de pontos em P² e seus ideais.

Este módulo fornece:
- PointConfig (pontos reduzidos) e IdealHandle (ideal de Hilbert-Burch)
- Dimensões de ideais grau a grau e função de Hilbert
- Tabelas de Betti e matrizes de sizígias explícitas
- Detectores de admissibilidade por testes de posto exatos
"""

import itertools
import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, NamedTuple, Optional, Protocol, Sequence, Tuple, Union

import numpy as np

from p2moduli.chern import ideal_points
from p2moduli.errors import (
    ConservationError,
    InfeasibleConfigError,
    ModuliError,
    ShapeError,
    UnknownDetectorError,
    ZeroPointError,
)
from p2moduli.exactalg import (
    Field,
    HPoly,
    Mat,
    PolyMatrix,
    RationalField,
    field_from_json,
    hilbert_count,
    maximal_minors,
    monomial_index,
    monomials,
    multiplication_matrix,
    random_invertible,
)
from p2moduli.gaeta import GradedShape, divisorial_betti
from p2moduli.utils.serialization import fmt_q, parse_q

logger = logging.getLogger("p2moduli.points")

Point = Tuple[Any, Any, Any]

# Acima deste tamanho a reconstrução do ideal pelos menores é pulada
HB_CHECK_LIMIT = 12


class IdealDim(NamedTuple):
    h0: int
    hilbert: int


class Subscheme(Protocol):
    """Subesquema de comprimento finito com bases de I_m calculáveis."""

    field: Field
    label: str

    @property
    def length(self) -> int: ...

    def ideal_basis(self, degree: int) -> np.ndarray: ...


# -----------------------------------------------
# Auxiliares de álgebra linear graduada
# -----------------------------------------------

def _row_basis(fld: Field, rows: np.ndarray) -> np.ndarray:
    """Linhas não nulas da forma escalonada reduzida (base do espaço gerado)."""
    if rows.shape[0] == 0:
        return rows
    reduced, pivots = Mat(fld, rows).rref()
    return reduced[: len(pivots)]


def _shift_by_variables(fld: Field, rows: np.ndarray, degree: int) -> np.ndarray:
    """Multiplica cada linha (forma de grau `degree`) por x, y e z."""
    target = monomial_index(degree + 1)
    out = fld.zeros(3 * rows.shape[0], hilbert_count(degree + 1))
    for v, unit in enumerate(((1, 0, 0), (0, 1, 0), (0, 0, 1))):
        idx = [target[(e[0] + unit[0], e[1] + unit[1], e[2] + unit[2])] for e in monomials(degree)]
        block = out[v * rows.shape[0]:(v + 1) * rows.shape[0]]
        block[:, idx] = rows
    return out


def _extend_basis(fld: Field, base: np.ndarray, candidates: np.ndarray) -> List[np.ndarray]:
    """Candidatos que aumentam o posto do espaço gerado por `base`, em ordem."""
    chosen: List[np.ndarray] = []
    current = base
    rank = Mat(fld, current).rank() if current.shape[0] else 0
    for vec in candidates:
        trial = np.vstack([current, vec.reshape(1, -1)]) if current.shape[0] else vec.reshape(1, -1)
        new_rank = Mat(fld, trial).rank()
        if new_rank > rank:
            chosen.append(vec)
            current, rank = trial, new_rank
    return chosen


# -----------------------------------------------
# Configurações de pontos
# -----------------------------------------------

def _normalized(fld: Field, pt: Point) -> Point:
    lead = next(v for v in pt if v != 0)
    inv = fld.inverse(lead)
    return tuple(fld.coerce(v * inv) for v in pt)  # type: ignore[return-value]


@dataclass(frozen=True, eq=False)
class PointConfig:
    """
    Conjunto reduzido de pontos projetivos sobre um corpo exato.

    Args:
        field: Corpo das coordenadas.
        points: Triplas projetivas, duas a duas distintas.
        label: Rótulo de geometria (por exemplo "Q_6(7)").
        seed: Semente usada para gerar a configuração, se houver.
    """

    field: Field
    points: Tuple[Point, ...]
    label: str = ""
    seed: Optional[int] = None
    _cache: Dict[int, np.ndarray] = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        coerced = []
        seen = set()
        for pt in self.points:
            if len(pt) != 3:
                raise ShapeError(f"Ponto {pt!r} não tem três coordenadas")
            triple = tuple(self.field.coerce(v) for v in pt)
            if all(v == 0 for v in triple):
                raise ZeroPointError("Ponto (0, 0, 0) em configuração")
            key = _normalized(self.field, triple)  # type: ignore[arg-type]
            if key in seen:
                raise InfeasibleConfigError(f"Ponto repetido {triple}")
            seen.add(key)
            coerced.append(triple)
        object.__setattr__(self, "points", tuple(coerced))

    @property
    def length(self) -> int:
        return len(self.points)

    def evaluation_matrix(self, degree: int) -> Mat:
        """Matriz n x C(m+2,2) das avaliações dos monômios de grau m."""
        mons = monomials(degree)
        arr = self.field.zeros(self.length, len(mons))
        for i, (x, y, z) in enumerate(self.points):
            for j, (a, b, c) in enumerate(mons):
                arr[i, j] = self.field.coerce(x ** a * y ** b * z ** c)
        return Mat(self.field, arr)

    def ideal_basis(self, degree: int) -> np.ndarray:
        if degree < 0:
            return self.field.zeros(0, 0)
        if degree not in self._cache:
            kernel = self.evaluation_matrix(degree).kernel()
            rows = np.vstack(kernel) if kernel else self.field.zeros(0, hilbert_count(degree))
            self._cache[degree] = _row_basis(self.field, rows)
        return self._cache[degree]

    def with_points(self, points: Sequence[Point], label: Optional[str] = None) -> "PointConfig":
        return PointConfig(self.field, tuple(points), self.label if label is None else label, self.seed)

    def to_json(self) -> Dict[str, Any]:
        return {
            "field": self.field.to_json(),
            "points": [[_q(v) for v in pt] for pt in self.points],
            "label": self.label,
            "seed": self.seed,
        }

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "PointConfig":
        fld = field_from_json(data.get("field", "Q"))
        points = tuple(tuple(fld.coerce(parse_q(str(v))) for v in pt) for pt in data["points"])
        return cls(fld, points, data.get("label", "") or "", data.get("seed"))

    @classmethod
    def load(cls, path: Union[str, Path]) -> "PointConfig":
        with open(path, "r", encoding="utf-8") as f:
            return cls.from_json(json.load(f))

    def save(self, path: Union[str, Path]) -> None:
        with open(path, "w", encoding="utf-8") as f:
            json.dump(self.to_json(), f, indent=2, sort_keys=True)


@dataclass(frozen=True, eq=False)
class IdealHandle:
    """
    Ideal dado por geradores, tipicamente os menores maximais de uma matriz
    de Hilbert-Burch; não há pontos explícitos.
    """

    field: Field
    generators: Tuple[HPoly, ...]
    length: int
    matrix: Optional[PolyMatrix] = None
    label: str = ""
    _cache: Dict[int, np.ndarray] = field(default_factory=dict, repr=False, compare=False)

    def ideal_basis(self, degree: int) -> np.ndarray:
        if degree < 0:
            return self.field.zeros(0, 0)
        if degree not in self._cache:
            blocks = [
                multiplication_matrix(self.field, g, degree - g.degree).data.T
                for g in self.generators
                if not g.is_zero() and g.degree <= degree
            ]
            rows = np.vstack(blocks) if blocks else self.field.zeros(0, hilbert_count(degree))
            self._cache[degree] = _row_basis(self.field, rows)
        return self._cache[degree]


# -----------------------------------------------
# Geração de configurações
# -----------------------------------------------

def _random_point(fld: Field, rng: np.random.Generator) -> Point:
    while True:
        pt = (fld.random_scalar(rng), fld.random_scalar(rng), fld.random_scalar(rng))
        if any(v != 0 for v in pt):
            return pt


def _scalar(value: Any) -> Any:
    return int(value) if isinstance(value, np.integer) else value


def _q(value: Any) -> str:
    return fmt_q(value if isinstance(value, Fraction) else Fraction(int(value)))


def _apply(fld: Field, A: Mat, pt: Point) -> Point:
    return tuple(  # type: ignore[return-value]
        fld.coerce(sum(_scalar(A.data[i, j]) * pt[j] for j in range(3))) for i in range(3)
    )


def _curve_points(
    fld: Field,
    param: str,
    k: int,
    rng: np.random.Generator,
    include_node: bool,
) -> List[Point]:
    """k pontos distintos na curva racional nomeada, em coordenadas aleatórias."""
    A = random_invertible(fld, 3, rng)
    pts: List[Point] = []
    keys = set()
    if param == "cubic" and include_node:
        node = _apply(fld, A, (0, 0, 1))
        pts.append(node)
        keys.add(_normalized(fld, node))
    attempts = 0
    while len(pts) < k:
        attempts += 1
        if attempts > 100 * (k + 1):
            raise InfeasibleConfigError(f"Não há {k} pontos distintos na curva sobre {fld!r}")
        s, t = fld.one, fld.random_scalar(rng)
        if param == "line":
            base = (s, t, fld.zero)
        elif param == "conic":
            base = (s * s, s * t, t * t)
        else:
            # cúbica nodal y²z = x²(x + z), nó em (0 : 0 : 1) para t = ±s
            if fld.coerce(t * t - s * s) == 0:
                continue
            base = (s * (t * t - s * s), t * (t * t - s * s), s * s * s)
        pt = _apply(fld, A, tuple(fld.coerce(v) for v in base))  # type: ignore[arg-type]
        key = _normalized(fld, pt)
        if key not in keys:
            keys.add(key)
            pts.append(pt)
    return pts


def generate_config(
    spec: str,
    n: int,
    seed: int = 0,
    fld: Optional[Field] = None,
    k: Optional[int] = None,
    matrix: Optional[PolyMatrix] = None,
    include_node: bool = False,
) -> Union[PointConfig, "IdealHandle"]:
    """
    Gera uma configuração determinística a partir da semente.

    Args:
        spec: "general", "collinear", "on_conic", "on_cubic" ou "hilbert_burch".
        n: Número total de pontos.
        seed: Semente do gerador numpy.
        fld: Corpo de trabalho (QQ por padrão).
        k: Quantos pontos ficam na curva especial; o resto é geral.
        matrix: Matriz de Hilbert-Burch para spec="hilbert_burch"; sem ela
            usa-se uma matriz aleatória da tabela divisorial de n.
        include_node: Para "on_cubic", inclui o nó entre os k pontos.

    Returns:
        PointConfig, ou IdealHandle para spec="hilbert_burch".

    Raises:
        InfeasibleConfigError: Se k > n, n < 1 ou spec desconhecida.
    """
    fld = fld or RationalField()
    if spec == "hilbert_burch":
        if matrix is not None:
            return hilbert_burch_ideal(matrix)
        try:
            shape = divisorial_betti(n)
        except ModuliError as exc:
            raise InfeasibleConfigError(f"Sem tabela divisorial para n={n}: {exc}") from exc
        return random_hilbert_burch(shape, fld, seed, f"D_Betti({n})")
    if n < 1:
        raise InfeasibleConfigError(f"n deve ser positivo, recebido {n}")
    rng = np.random.default_rng(seed)
    curve = {"general": None, "collinear": "line", "on_conic": "conic", "on_cubic": "cubic"}
    if spec not in curve:
        raise InfeasibleConfigError(f"Especificação desconhecida: {spec}")
    k = 0 if curve[spec] is None else (n if k is None else k)
    if not 0 <= k <= n:
        raise InfeasibleConfigError(f"k={k} fora de [0, {n}]")

    pts: List[Point] = []
    if curve[spec] is not None:
        pts = _curve_points(fld, curve[spec], k, rng, include_node)  # type: ignore[arg-type]
    keys = {_normalized(fld, p) for p in pts}
    while len(pts) < n:
        pt = _random_point(fld, rng)
        key = _normalized(fld, pt)
        if key not in keys:
            keys.add(key)
            pts.append(pt)
    label = spec if curve[spec] is None else f"{spec}({k})"
    logger.debug(f"Configuração {label} com n={n}, semente {seed}")
    return PointConfig(fld, tuple(pts), label, seed)


def apply_linear_change(cfg: PointConfig, A: Mat) -> PointConfig:
    """Imagem da configuração pela mudança projetiva p -> A·p."""
    if A.rows != 3 or A.cols != 3 or A.rank() != 3:
        raise ShapeError("Mudança de coordenadas precisa ser 3x3 invertível")
    return cfg.with_points([_apply(cfg.field, A, p) for p in cfg.points])


# -----------------------------------------------
# Dimensões, regularidade e tabelas de Betti
# -----------------------------------------------

def ideal_dim(z: Subscheme, m: int) -> IdealDim:
    """h⁰(I_Z(m)) e o valor da função de Hilbert em m."""
    if m < 0:
        return IdealDim(0, 0)
    h0 = int(z.ideal_basis(m).shape[0])
    return IdealDim(h0, hilbert_count(m) - h0)


def hilbert_regularity(z: Subscheme) -> int:
    """Menor m com função de Hilbert igual ao comprimento."""
    for m in range(z.length + 1):
        if ideal_dim(z, m).hilbert == z.length:
            return m
    raise ConservationError(f"Função de Hilbert não atinge {z.length}")


def regularity(z: Subscheme) -> int:
    """Regularidade de Castelnuovo-Mumford de I_Z."""
    return hilbert_regularity(z) + 1


@dataclass(frozen=True)
class BettiTable:
    """Números de Betti graduados de I_Z: beta1 geradores, beta2 sizígias."""

    beta1: Dict[int, int]
    beta2: Dict[int, int]

    __hash__ = None  # type: ignore[assignment]

    def shape(self) -> GradedShape:
        return GradedShape(
            tuple((-j, c) for j, c in self.beta2.items()),
            tuple((-j, c) for j, c in self.beta1.items()),
        )

    def to_json(self) -> Dict[str, Dict[str, int]]:
        return {
            "beta1": {str(j): c for j, c in sorted(self.beta1.items())},
            "beta2": {str(j): c for j, c in sorted(self.beta2.items())},
        }

    def __str__(self) -> str:
        return str(self.shape())


def _hilbert_identity(beta1: Dict[int, int], beta2: Dict[int, int], m: int) -> int:
    return sum(c * hilbert_count(m - j) for j, c in beta1.items()) - sum(
        c * hilbert_count(m - j) for j, c in beta2.items()
    )


def _new_generator_count(z: Subscheme, j: int) -> Tuple[int, np.ndarray, np.ndarray]:
    """(beta1(j), base de R_1·I_{j-1}, base de I_j)."""
    basis = z.ideal_basis(j)
    prev = z.ideal_basis(j - 1)
    if prev.shape[0]:
        products = _row_basis(z.field, _shift_by_variables(z.field, prev, j - 1))
    else:
        products = z.field.zeros(0, hilbert_count(j))
    return basis.shape[0] - products.shape[0], products, basis


def betti_table(z: Subscheme) -> BettiTable:
    """
    Tabela de Betti de I_Z.

    beta1 vem das bases de I_j e dos postos de R_1·I_{j-1}; beta2 sai da
    identidade da série de Hilbert.

    Raises:
        ConservationError: Se os dados de Hilbert são inconsistentes.
    """
    r0 = hilbert_regularity(z)
    beta1: Dict[int, int] = {}
    for j in range(1, r0 + 2):
        count = _new_generator_count(z, j)[0]
        if count:
            beta1[j] = count

    beta2: Dict[int, int] = {}
    for m in range(1, r0 + 3):
        value = _hilbert_identity(beta1, beta2, m) - ideal_dim(z, m).h0
        if value < 0:
            raise ConservationError(f"beta2({m}) = {value} negativo")
        if value:
            beta2[m] = value

    table = BettiTable(beta1, beta2)
    for m in range(0, r0 + 5):
        if _hilbert_identity(beta1, beta2, m) != ideal_dim(z, m).h0:
            raise ConservationError(f"Identidade de Hilbert falha no grau {m}")
    if sum(beta1.values()) - sum(beta2.values()) != 1:
        raise ConservationError(f"Σβ1 − Σβ2 ≠ 1 em {table}")
    table.shape().check_conservation(ideal_points(z.length))
    logger.debug(f"Tabela de Betti {table} (n={z.length}, r0={r0})")
    return table


# -----------------------------------------------
# Sizígias e Hilbert-Burch
# -----------------------------------------------

def _generators(z: Subscheme, table: BettiTable) -> List[HPoly]:
    gens: List[HPoly] = []
    for j in sorted(table.beta1):
        _, products, basis = _new_generator_count(z, j)
        new = _extend_basis(z.field, products, basis)
        if len(new) != table.beta1[j]:
            raise ConservationError(f"Esperados {table.beta1[j]} geradores no grau {j}")
        gens.extend(HPoly.from_coefficients(z.field, j, v) for v in new)
    return gens


def _syzygy_map(fld: Field, gens: Sequence[HPoly], t: int) -> Mat:
    """⊕ R_{t - deg g_i} -> R_t, (a_i) -> Σ a_i g_i."""
    blocks = [
        multiplication_matrix(fld, g, t - g.degree).data
        for g in gens
    ]
    return Mat(fld, np.hstack(blocks))


def _shift_blocks(fld: Field, vectors: np.ndarray, degrees: Sequence[int]) -> np.ndarray:
    """Multiplica vetores de ⊕ R_{d_i} por x, y, z, bloco a bloco."""
    pieces = []
    start = 0
    for d in degrees:
        size = hilbert_count(d)
        block = vectors[:, start:start + size]
        if d >= 0 and block.shape[0]:
            pieces.append(_shift_by_variables(fld, block, d))
        else:
            pieces.append(fld.zeros(3 * vectors.shape[0], hilbert_count(d + 1)))
        start += size
    return np.hstack(pieces)


def syzygy_matrix(z: Subscheme, table: Optional[BettiTable] = None) -> PolyMatrix:
    """
    Matriz de Hilbert-Burch minimal de I_Z.

    Linhas são os geradores (twist = grau), colunas as sizígias minimais.
    Para n pequeno os menores maximais são comparados de volta com I_Z.

    Raises:
        ConservationError: Se o número de sizígias não bate com beta2.
    """
    table = table or betti_table(z)
    fld = z.field
    gens = _generators(z, table)
    degrees = [g.degree for g in gens]
    columns: List[Tuple[int, np.ndarray]] = []
    previous: Optional[np.ndarray] = None
    for t in range(min(degrees) + 1, max(table.beta2) + 1):
        kernel = _syzygy_map(fld, gens, t).kernel()
        kernel_rows = np.vstack(kernel) if kernel else None
        if previous is not None and previous.shape[0]:
            base = _row_basis(fld, _shift_blocks(fld, previous, [t - 1 - d for d in degrees]))
        else:
            base = fld.zeros(0, sum(hilbert_count(t - d) for d in degrees))
        new = _extend_basis(fld, base, kernel_rows) if kernel_rows is not None else []
        if len(new) != table.beta2.get(t, 0):
            raise ConservationError(
                f"Esperadas {table.beta2.get(t, 0)} sizígias no grau {t}, achadas {len(new)}"
            )
        columns.extend((t, v) for v in new)
        previous = kernel_rows if kernel_rows is not None else fld.zeros(0, base.shape[1])

    entries: List[List[Optional[HPoly]]] = [[None] * len(columns) for _ in gens]
    for j, (t, vec) in enumerate(columns):
        start = 0
        for i, d in enumerate(degrees):
            size = hilbert_count(t - d)
            if size:
                entries[i][j] = HPoly.from_coefficients(fld, t - d, vec[start:start + size])
            start += size
    pm = PolyMatrix.build(fld, degrees, [t for t, _ in columns], entries)

    if z.length <= HB_CHECK_LIMIT:
        handle = hilbert_burch_ideal(pm)
        r0 = hilbert_regularity(z)
        for m in range(r0 + 2):
            if ideal_dim(handle, m) != ideal_dim(z, m):
                raise ConservationError(f"Menores maximais não geram I_Z no grau {m}")
    return pm


def matrix_shape(pm: PolyMatrix) -> GradedShape:
    """Forma graduada O(−col)^… → O(−row)^… de uma matriz de Hilbert-Burch."""
    return GradedShape(
        tuple((-c, 1) for c in pm.col_twists),
        tuple((-r, 1) for r in pm.row_twists),
    )


def hilbert_burch_ideal(pm: PolyMatrix, label: str = "") -> IdealHandle:
    """
    Ideal dos menores maximais com sinal de uma matriz (m+1) x m.

    Entradas de grau zero são descartadas antes (a matriz fica minimal).

    Raises:
        ShapeError: Formato errado, classe que não é de pontos ou menores todos nulos.
    """
    rows, cols = pm.shape
    if rows != cols + 1:
        raise ShapeError(f"Hilbert-Burch exige (m+1) x m, recebido {rows}x{cols}")
    minimal = PolyMatrix.build(
        pm.field,
        pm.row_twists,
        pm.col_twists,
        [
            [None if c - r == 0 else pm.entry(i, j) for j, c in enumerate(pm.col_twists)]
            for i, r in enumerate(pm.row_twists)
        ],
    )
    xi = matrix_shape(minimal).class_of()
    if xi.r != 1 or xi.mu != 0 or xi.ch2 > 0:
        raise ShapeError(f"Twists {matrix_shape(minimal)} não resolvem um ideal de pontos")
    gens = maximal_minors(minimal)
    if all(g.is_zero() for g in gens):
        raise ShapeError("Todos os menores maximais são nulos")
    return IdealHandle(pm.field, tuple(gens), int(-xi.ch2), minimal, label)


def random_hilbert_burch(
    shape: GradedShape,
    fld: Optional[Field] = None,
    seed: int = 0,
    label: str = "",
) -> IdealHandle:
    """Ideal de uma matriz de Hilbert-Burch aleatória com os twists da forma dada."""
    fld = fld or RationalField()
    rng = np.random.default_rng(seed)
    pm = PolyMatrix.random(
        fld,
        [-t for t, m in shape.targets for _ in range(m)],
        [-t for t, m in shape.sources for _ in range(m)],
        rng,
    )
    return hilbert_burch_ideal(pm, label or str(shape))


def dependent_twelve_matrix(fld: Field, dependent: str, seed: int = 0) -> PolyMatrix:
    """
    Matriz G_1 de n = 12 (linhas 4, 4, 4, 5; colunas 5, 6, 6) com formas lineares dependentes.

    Com dependent="l1_l3" a terceira forma da coluna 5 é l1 + l2; com
    dependent="l4_l5" a forma da última coluna na linha 5 é 2·l4.

    Raises:
        ShapeError: Para outro valor de `dependent`.
    """
    if dependent not in ("l1_l3", "l4_l5"):
        raise ShapeError(f"Dependência desconhecida: {dependent}")
    pm = PolyMatrix.random(fld, [4, 4, 4, 5], [5, 6, 6], np.random.default_rng(seed))
    entries = [[pm.entry(i, j) for j in range(3)] for i in range(4)]
    if dependent == "l1_l3":
        entries[2][0] = entries[0][0] + entries[1][0]
    else:
        entries[3][2] = entries[3][1] + entries[3][1]
    return PolyMatrix.build(fld, pm.row_twists, pm.col_twists, entries)


def ideal_handle_from_config(cfg: PointConfig) -> IdealHandle:
    """IdealHandle pelos menores da matriz de sizígias de uma configuração."""
    handle = hilbert_burch_ideal(syzygy_matrix(cfg), cfg.label)
    if handle.length != cfg.length:
        raise ConservationError("Comprimento do ideal difere do número de pontos")
    return handle


# -----------------------------------------------
# Detectores de admissibilidade
# -----------------------------------------------

class Detection(NamedTuple):
    detector: str
    target: str
    admissible: bool
    witness: Dict[str, Any]

    def verdict(self) -> str:
        prefix = "" if self.admissible else "not "
        return f"{prefix}{self.target}-admissible"


def _linear_block(pm: PolyMatrix, cells: Sequence[Tuple[int, int]]) -> Mat:
    """Coeficientes (x, y, z) das formas lineares nas células dadas, uma por linha."""
    rows = []
    for i, j in cells:
        e = pm.entry(i, j)
        if pm.col_twists[j] - pm.row_twists[i] != 1:
            raise ShapeError(f"Entrada ({i},{j}) não é linear")
        rows.append(e.coefficients() if not e.is_zero() else [pm.field.zero] * 3)
    return Mat.from_rows(pm.field, rows, 3)


def _rows_with(pm: PolyMatrix, twist: int) -> List[int]:
    return [i for i, r in enumerate(pm.row_twists) if r == twist]


def _cols_with(pm: PolyMatrix, twist: int) -> List[int]:
    return [j for j, c in enumerate(pm.col_twists) if c == twist]


def _require(pm: PolyMatrix, rows: Sequence[int], cols: Sequence[int], name: str) -> None:
    if sorted(pm.row_twists) != sorted(rows) or sorted(pm.col_twists) != sorted(cols):
        raise ShapeError(
            f"Detector {name} exige linhas {sorted(rows)} e colunas {sorted(cols)}, "
            f"recebido {sorted(pm.row_twists)} e {sorted(pm.col_twists)}"
        )


def _n7_rank(pm: PolyMatrix) -> Tuple[int, Mat]:
    _require(pm, (3, 3, 3), (4, 5), "n=7")
    j = _cols_with(pm, 4)[0]
    block = _linear_block(pm, [(i, j) for i in _rows_with(pm, 3)])
    return block.rank(), block


def _n8_rank(pm: PolyMatrix) -> Tuple[int, Mat]:
    _require(pm, (3, 3, 4), (5, 5), "n=8")
    i = _rows_with(pm, 4)[0]
    block = _linear_block(pm, [(i, j) for j in _cols_with(pm, 5)])
    return block.rank(), block


def _n12_ranks(pm: PolyMatrix) -> Tuple[Tuple[int, Mat], Tuple[int, Mat]]:
    _require(pm, (4, 4, 4, 5), (5, 6, 6), "n=12 G_1")
    col5 = _cols_with(pm, 5)[0]
    row5 = _rows_with(pm, 5)[0]
    first = _linear_block(pm, [(i, col5) for i in _rows_with(pm, 4)])
    second = _linear_block(pm, [(row5, j) for j in _cols_with(pm, 6)])
    return (first.rank(), first), (second.rank(), second)


def _block_json(block: Mat) -> List[List[str]]:
    return [[_q(v) for v in row] for row in block.data]


def zero_block_search(pm: PolyMatrix, sub: GradedShape, max_subset: int = 3) -> Optional[Dict[str, Any]]:
    """
    Procura linhas R e colunas C com twists de `sub` tais que pm[fora de R, C] = 0.

    Busca exaustiva limitada por max_subset; não tenta reduções de linha e
    coluna, então um resultado negativo não prova a não admissibilidade.
    """
    want_rows = sorted(-t for t, m in sub.targets for _ in range(m))
    want_cols = sorted(-t for t, m in sub.sources for _ in range(m))
    if len(want_rows) > max_subset or len(want_cols) > max_subset:
        raise ShapeError(f"Subcomplexo {sub} excede max_subset={max_subset}")
    nrows, ncols = pm.shape
    for rows in itertools.combinations(range(nrows), len(want_rows)):
        if sorted(pm.row_twists[i] for i in rows) != want_rows:
            continue
        outside = [i for i in range(nrows) if i not in rows]
        for cols in itertools.combinations(range(ncols), len(want_cols)):
            if sorted(pm.col_twists[j] for j in cols) != want_cols:
                continue
            if all(pm.entry(i, j).is_zero() for i in outside for j in cols):
                return {"rows": list(rows), "cols": list(cols)}
    return None


DETECTORS = ("n7_T", "n7_I1", "n8_I4", "n12_I1", "n12_I7", "n12_T", "zero_block")


def detect_admissible(
    pm: PolyMatrix,
    detector: str,
    sub: Optional[GradedShape] = None,
    target: Optional[str] = None,
    max_subset: int = 3,
) -> Detection:
    """
    Testa se o feixe resolvido por `pm` é F-admissível para o detector dado.

    Args:
        pm: Matriz de sizígias (linhas = geradores).
        detector: Um de DETECTORS.
        sub: Forma do subcomplexo para "zero_block".
        target: Nome do objeto F para "zero_block".
        max_subset: Tamanho máximo dos subconjuntos na busca genérica.

    Raises:
        UnknownDetectorError: Detector fora do catálogo.
        ShapeError: Matriz com twists incompatíveis.
    """
    if detector in ("n7_T", "n7_I1"):
        rank, block = _n7_rank(pm)
        witness = {"rank": rank, "block": _block_json(block)}
        if detector == "n7_T":
            return Detection(detector, "T(-4)", rank == 3, witness)
        return Detection(detector, "I_1(-2)", rank <= 2, witness)
    if detector == "n8_I4":
        rank, block = _n8_rank(pm)
        return Detection(detector, "I_4(-1)", rank <= 1, {"rank": rank, "block": _block_json(block)})
    if detector in ("n12_I1", "n12_I7", "n12_T"):
        (r1, b1), (r2, b2) = _n12_ranks(pm)
        witness = {"rank_l1_l3": r1, "rank_l4_l5": r2, "l1_l3": _block_json(b1), "l4_l5": _block_json(b2)}
        if detector == "n12_I1":
            return Detection(detector, "I_1(-3)", r1 <= 2, witness)
        if detector == "n12_I7":
            return Detection(detector, "I_7(-1)", r2 <= 1, witness)
        return Detection(detector, "T(-5)", r1 == 3 and r2 == 2, witness)
    if detector == "zero_block":
        if sub is None:
            raise ShapeError("Detector zero_block exige a forma do subcomplexo")
        found = zero_block_search(pm, sub, max_subset)
        return Detection(detector, target or str(sub), found is not None, found or {})
    raise UnknownDetectorError(f"Detector desconhecido: {detector}")


def auto_detectors(pm: PolyMatrix) -> List[str]:
    """Detectores do catálogo aplicáveis aos twists de `pm`."""
    shape = (sorted(pm.row_twists), sorted(pm.col_twists))
    if shape == ([3, 3, 3], [4, 5]):
        return ["n7_T", "n7_I1"]
    if shape == ([3, 3, 4], [5, 5]):
        return ["n8_I4"]
    if shape == ([4, 4, 4, 5], [5, 6, 6]):
        return ["n12_T", "n12_I1", "n12_I7"]
    return []
