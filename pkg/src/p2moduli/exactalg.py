#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Álgebra linear exata para o p2moduli.

Este módulo fornece a base aritmética de todas as outras computações:
- Corpos exatos: racionais (fractions.Fraction) e um corpo primo configurável
- Matrizes densas sobre numpy com posto, núcleo, solução e determinante
- Polinômios homogêneos em x, y, z (representação esparsa)
- Matrizes polinomiais graduadas e seus menores maximais
"""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from p2moduli.errors import FieldMismatchError, ShapeError, ZeroPointError

logger = logging.getLogger("p2moduli.exactalg")

# 2^31 - 1; produtos de dois resíduos cabem em int64
DEFAULT_PRIME = 2147483647

# Acima deste primo os produtos estouram int64 e usamos dtype=object
_INT64_SAFE_PRIME = 3037000499

Exponent = Tuple[int, int, int]


# -----------------------------------------------
# Corpos
# -----------------------------------------------

class Field(ABC):
    """Corpo exato em que vivem os escalares de uma computação."""

    name: str = ""

    @property
    @abstractmethod
    def dtype(self) -> Any:
        """dtype numpy usado pelas matrizes deste corpo."""

    @abstractmethod
    def coerce(self, value: Any) -> Any:
        """Converte int/Fraction/str para um escalar normalizado do corpo."""

    @abstractmethod
    def inverse(self, value: Any) -> Any:
        """Inverso multiplicativo de um escalar não nulo."""

    @abstractmethod
    def reduce(self, arr: np.ndarray) -> np.ndarray:
        """Normaliza um array após operações nativas."""

    @abstractmethod
    def random_scalar(self, rng: np.random.Generator) -> Any:
        """Escalar aleatório (reprodutível pelo gerador)."""

    @abstractmethod
    def to_json(self) -> Any:
        """Representação JSON do corpo."""

    @property
    def zero(self) -> Any:
        return self.coerce(0)

    @property
    def one(self) -> Any:
        return self.coerce(1)

    def array(self, rows: Iterable[Iterable[Any]], cols: Optional[int] = None) -> np.ndarray:
        """Cria um array 2D normalizado a partir de linhas."""
        data = [[self.coerce(v) for v in row] for row in rows]
        if not data:
            return np.zeros((0, cols or 0), dtype=self.dtype)
        arr = np.empty((len(data), len(data[0])), dtype=self.dtype)
        for i, row in enumerate(data):
            if len(row) != arr.shape[1]:
                raise ShapeError("Linhas com comprimentos diferentes")
            arr[i, :] = row
        return arr

    def zeros(self, rows: int, cols: int) -> np.ndarray:
        if self.dtype is object:
            arr = np.empty((rows, cols), dtype=object)
            arr.fill(self.zero)
            return arr
        return np.zeros((rows, cols), dtype=self.dtype)

    def check_same(self, other: "Field") -> None:
        if self != other:
            raise FieldMismatchError(
                f"Mistura de corpos não permitida: {self.name} e {other.name}"
            )


class RationalField(Field):
    """Corpo dos racionais, com escalares Fraction sempre em termos mínimos."""

    name = "QQ"

    @property
    def dtype(self) -> Any:
        return object

    def coerce(self, value: Any) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, (int, np.integer)):
            return Fraction(int(value))
        if isinstance(value, str):
            return Fraction(value)
        raise FieldMismatchError(f"Valor {value!r} não pertence a QQ")

    def inverse(self, value: Any) -> Fraction:
        if value == 0:
            raise ZeroDivisionError("Inverso de zero")
        return 1 / Fraction(value)

    def reduce(self, arr: np.ndarray) -> np.ndarray:
        return arr

    def random_scalar(self, rng: np.random.Generator) -> Fraction:
        return Fraction(int(rng.integers(-50, 51)))

    def to_json(self) -> Any:
        return "Q"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("QQ")

    def __repr__(self) -> str:
        return "RationalField()"


class PrimeField(Field):
    """Corpo primo Z/pZ; escalares são inteiros em [0, p)."""

    def __init__(self, p: int = DEFAULT_PRIME):
        if p < 2:
            raise FieldMismatchError(f"Característica inválida: {p}")
        self.p = int(p)
        self.name = f"GF({self.p})"

    @property
    def dtype(self) -> Any:
        return np.int64 if self.p <= _INT64_SAFE_PRIME else object

    def coerce(self, value: Any) -> int:
        if isinstance(value, (int, np.integer)):
            return int(value) % self.p
        if isinstance(value, str):
            value = Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise FieldMismatchError(
                    f"Denominador {value.denominator} não invertível mod {self.p}"
                )
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        raise FieldMismatchError(f"Valor {value!r} não pertence a {self.name}")

    def inverse(self, value: Any) -> int:
        value = int(value) % self.p
        if value == 0:
            raise ZeroDivisionError("Inverso de zero")
        return pow(value, -1, self.p)

    def reduce(self, arr: np.ndarray) -> np.ndarray:
        return arr % self.p

    def random_scalar(self, rng: np.random.Generator) -> int:
        return int(rng.integers(0, self.p))

    def to_json(self) -> Any:
        return {"p": self.p}

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("GF", self.p))

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"


def field_from_json(data: Any) -> Field:
    """Reconstrói um corpo a partir de "Q" ou {"p": ...}."""
    if data == "Q":
        return RationalField()
    if isinstance(data, dict) and "p" in data:
        return PrimeField(int(data["p"]))
    raise FieldMismatchError(f"Corpo desconhecido: {data!r}")


# -----------------------------------------------
# Matrizes densas
# -----------------------------------------------

class RankKernel(NamedTuple):
    rank: int
    kernel: List[np.ndarray]


@dataclass(frozen=True, eq=False)
class Mat:
    """
    Matriz densa imutável sobre um corpo exato.

    Args:
        field: Corpo dos escalares.
        data: Array 2D já normalizado (não é copiado).
    """

    field: Field
    data: np.ndarray

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence[Any]], cols: Optional[int] = None) -> "Mat":
        return cls(field, field.array(rows, cols))

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Mat":
        return cls(field, field.zeros(rows, cols))

    @classmethod
    def identity(cls, field: Field, n: int) -> "Mat":
        arr = field.zeros(n, n)
        for i in range(n):
            arr[i, i] = field.one
        return cls(field, arr)

    @classmethod
    def random(cls, field: Field, rows: int, cols: int, rng: np.random.Generator) -> "Mat":
        arr = field.zeros(rows, cols)
        for i in range(rows):
            for j in range(cols):
                arr[i, j] = field.random_scalar(rng)
        return cls(field, arr)

    @property
    def rows(self) -> int:
        return int(self.data.shape[0])

    @property
    def cols(self) -> int:
        return int(self.data.shape[1])

    def __matmul__(self, other: "Mat") -> "Mat":
        self.field.check_same(other.field)
        if self.cols != other.rows:
            raise ShapeError(f"Produto {self.rows}x{self.cols} por {other.rows}x{other.cols}")
        if self.field.dtype is np.int64:
            # acumula em blocos para não estourar int64
            p = self.field.p  # type: ignore[attr-defined]
            out = np.zeros((self.rows, other.cols), dtype=np.int64)
            step = 4
            for k in range(0, self.cols, step):
                out = (out + self.data[:, k:k + step] @ other.data[k:k + step, :]) % p
            return Mat(self.field, out)
        return Mat(self.field, self.field.reduce(self.data.dot(other.data)))

    def hstack(self, other: "Mat") -> "Mat":
        self.field.check_same(other.field)
        return Mat(self.field, np.hstack([self.data, other.data]))

    def vstack(self, other: "Mat") -> "Mat":
        self.field.check_same(other.field)
        return Mat(self.field, np.vstack([self.data, other.data]))

    def transpose(self) -> "Mat":
        return Mat(self.field, self.data.T.copy())

    def rref(self) -> Tuple[np.ndarray, List[int]]:
        """
        Forma escalonada reduzida com pivoteamento determinístico.

        O pivô de cada coluna é a primeira linha não nula a partir da linha
        corrente; colunas são percorridas em ordem.

        Returns:
            Tuple[np.ndarray, List[int]]: (matriz reduzida, colunas pivô).
        """
        A = self.data.copy()
        m, n = A.shape
        pivots: List[int] = []
        r = 0
        for c in range(n):
            if r == m:
                break
            nz = np.flatnonzero(A[r:, c] != 0)
            if nz.size == 0:
                continue
            k = r + int(nz[0])
            if k != r:
                A[[r, k]] = A[[k, r]]
            inv = self.field.inverse(A[r, c])
            A[r] = self.field.reduce(A[r] * inv)
            col = A[:, c].copy()
            col[r] = 0
            rows = np.flatnonzero(col != 0)
            if rows.size:
                A[rows] = self.field.reduce(A[rows] - np.outer(col[rows], A[r]))
            pivots.append(c)
            r += 1
        return A, pivots

    def rank(self) -> int:
        if self.rows == 0 or self.cols == 0:
            return 0
        return len(self.rref()[1])

    def kernel(self) -> List[np.ndarray]:
        """Base do núcleo, um vetor por coluna livre, em ordem de coluna."""
        R, pivots = self.rref()
        pivot_set = set(pivots)
        basis = []
        for f in range(self.cols):
            if f in pivot_set:
                continue
            v = self.field.zeros(1, self.cols)[0]
            v[f] = self.field.one
            for i, pc in enumerate(pivots):
                v[pc] = self.field.coerce(-_native(R[i, f]))
            basis.append(v)
        return basis

    def solve(self, rhs: Sequence[Any]) -> Optional[np.ndarray]:
        """Uma solução particular de A·x = rhs, ou None se o sistema é inconsistente."""
        b = self.field.array([[v] for v in rhs]) if len(rhs) else self.field.zeros(0, 1)
        if b.shape[0] != self.rows:
            raise ShapeError("Lado direito com comprimento errado")
        R, pivots = Mat(self.field, np.hstack([self.data, b])).rref()
        if pivots and pivots[-1] == self.cols:
            return None
        x = self.field.zeros(1, self.cols)[0]
        for i, pc in enumerate(pivots):
            x[pc] = R[i, self.cols]
        return x

    def det(self) -> Any:
        if self.rows != self.cols:
            raise ShapeError("Determinante de matriz não quadrada")
        A = self.data.copy()
        n = self.rows
        det = self.field.one
        for c in range(n):
            nz = np.flatnonzero(A[c:, c] != 0)
            if nz.size == 0:
                return self.field.zero
            k = c + int(nz[0])
            if k != c:
                A[[c, k]] = A[[k, c]]
                det = self.field.coerce(-_native(det))
            pivot = A[c, c]
            det = self.field.coerce(_native(det) * _native(pivot))
            inv = self.field.inverse(pivot)
            below = np.arange(c + 1, n)
            if below.size:
                factors = self.field.reduce(A[below, c] * inv)
                A[below] = self.field.reduce(A[below] - np.outer(factors, A[c]))
        return det


def rank_kernel(m: Mat) -> RankKernel:
    """
    Posto e base do núcleo de uma matriz.

    Args:
        m (Mat): Matriz de entrada.

    Returns:
        RankKernel: posto e vetores do núcleo (posto + dim núcleo = colunas).
    """
    if m.cols == 0:
        return RankKernel(0, [])
    R, pivots = m.rref()
    return RankKernel(len(pivots), m.kernel())


def span_rank(field: Field, vectors: Sequence[np.ndarray], length: int) -> int:
    """Dimensão do espaço gerado por uma lista de vetores."""
    if not vectors:
        return 0
    arr = np.vstack([np.asarray(v, dtype=field.dtype).reshape(1, length) for v in vectors])
    return Mat(field, arr).rank()


# -----------------------------------------------
# Polinômios homogêneos
# -----------------------------------------------

@lru_cache(maxsize=None)
def monomials(degree: int) -> Tuple[Exponent, ...]:
    """Expoentes de grau dado em ordem lexicográfica decrescente (x^d primeiro)."""
    if degree < 0:
        return ()
    return tuple(
        (a, b, degree - a - b)
        for a in range(degree, -1, -1)
        for b in range(degree - a, -1, -1)
    )


@lru_cache(maxsize=None)
def monomial_index(degree: int) -> Dict[Exponent, int]:
    return {e: i for i, e in enumerate(monomials(degree))}


def hilbert_count(degree: int) -> int:
    """dim R_m = C(m+2, 2), nulo para grau negativo."""
    return (degree + 2) * (degree + 1) // 2 if degree >= 0 else 0


@dataclass(frozen=True)
class HPoly:
    """
    Forma homogênea em x, y, z.

    Coeficientes nulos nunca são armazenados; o polinômio nulo pode ter
    qualquer grau (inclusive negativo, para entradas forçadas a zero).
    """

    field: Field
    degree: int
    terms: Dict[Exponent, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for e in self.terms:
            if sum(e) != self.degree:
                raise ShapeError(f"Monômio {e} fora do grau {self.degree}")

    __hash__ = None  # type: ignore[assignment]

    @classmethod
    def zero(cls, fld: Field, degree: int) -> "HPoly":
        return cls(fld, degree, {})

    @classmethod
    def monomial(cls, fld: Field, exps: Exponent, coeff: Any = 1) -> "HPoly":
        c = fld.coerce(coeff)
        return cls(fld, sum(exps), {tuple(exps): c} if c != 0 else {})

    @classmethod
    def variables(cls, fld: Field) -> Tuple["HPoly", "HPoly", "HPoly"]:
        return (
            cls.monomial(fld, (1, 0, 0)),
            cls.monomial(fld, (0, 1, 0)),
            cls.monomial(fld, (0, 0, 1)),
        )

    @classmethod
    def from_coefficients(cls, fld: Field, degree: int, coeffs: Sequence[Any]) -> "HPoly":
        """Polinômio a partir de um vetor na base monomials(degree)."""
        mons = monomials(degree)
        if len(coeffs) != len(mons):
            raise ShapeError("Vetor de coeficientes com tamanho errado")
        terms = {}
        for e, c in zip(mons, coeffs):
            c = fld.coerce(c)
            if c != 0:
                terms[e] = c
        return cls(fld, degree, terms)

    @classmethod
    def random(cls, fld: Field, degree: int, rng: np.random.Generator) -> "HPoly":
        return cls.from_coefficients(
            fld, degree, [fld.random_scalar(rng) for _ in monomials(degree)]
        )

    def is_zero(self) -> bool:
        return not self.terms

    def _norm(self, value: Any) -> Any:
        return self.field.coerce(value)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HPoly):
            return NotImplemented
        if self.field != other.field:
            return False
        if self.is_zero() and other.is_zero():
            return True
        return self.degree == other.degree and self.terms == other.terms

    def __add__(self, other: "HPoly") -> "HPoly":
        self.field.check_same(other.field)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.degree != other.degree:
            raise ShapeError(f"Soma de graus {self.degree} e {other.degree}")
        terms = dict(self.terms)
        for e, c in other.terms.items():
            v = self._norm(terms.get(e, 0) + c)
            if v != 0:
                terms[e] = v
            else:
                terms.pop(e, None)
        return HPoly(self.field, self.degree, terms)

    def __neg__(self) -> "HPoly":
        return self.scale(-1)

    def __sub__(self, other: "HPoly") -> "HPoly":
        return self + (-other)

    def scale(self, c: Any) -> "HPoly":
        c = self.field.coerce(c)
        if c == 0:
            return HPoly.zero(self.field, self.degree)
        return HPoly(self.field, self.degree, {e: self._norm(v * c) for e, v in self.terms.items()})

    def __mul__(self, other: "HPoly") -> "HPoly":
        self.field.check_same(other.field)
        degree = self.degree + other.degree
        if self.is_zero() or other.is_zero():
            return HPoly.zero(self.field, degree)
        acc: Dict[Exponent, Any] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                acc[e] = acc.get(e, 0) + c1 * c2
        terms = {}
        for e, v in acc.items():
            v = self._norm(v)
            if v != 0:
                terms[e] = v
        return HPoly(self.field, degree, terms)

    def evaluate(self, point: Sequence[Any]) -> Any:
        """
        Avalia o polinômio em um representante de ponto projetivo.

        Raises:
            ZeroPointError: Se o ponto é (0, 0, 0).
        """
        pt = [self.field.coerce(v) for v in point]
        if len(pt) != 3:
            raise ShapeError("Ponto projetivo precisa de três coordenadas")
        if all(v == 0 for v in pt):
            raise ZeroPointError("Ponto (0, 0, 0) não é projetivo")
        total = 0
        for (a, b, c), coeff in self.terms.items():
            total = self._norm(total + coeff * pt[0] ** a * pt[1] ** b * pt[2] ** c)
        return self._norm(total)

    def coefficients(self) -> List[Any]:
        """Vetor de coeficientes na base monomials(degree)."""
        return [self.terms.get(e, self.field.zero) for e in monomials(self.degree)]

    def substitute_linear(self, A: Sequence[Sequence[Any]]) -> "HPoly":
        """Compõe com a mudança linear (x, y, z) -> A·(x, y, z)."""
        x, y, z = HPoly.variables(self.field)
        images = []
        for row in A:
            form = HPoly.zero(self.field, 1)
            for coeff, var in zip(row, (x, y, z)):
                form = form + var.scale(coeff)
            images.append(form)
        result = HPoly.zero(self.field, self.degree)
        for (a, b, c), coeff in self.terms.items():
            term = HPoly.monomial(self.field, (0, 0, 0), coeff)
            for img, power in zip(images, (a, b, c)):
                for _ in range(power):
                    term = term * img
            result = result + term
        return result

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for e in monomials(self.degree):
            if e in self.terms:
                mon = "*".join(
                    f"{v}^{k}" if k > 1 else v for v, k in zip("xyz", e) if k
                ) or "1"
                parts.append(f"{self.terms[e]}*{mon}")
        return " + ".join(parts)


def multiplication_matrix(fld: Field, poly: HPoly, source_degree: int) -> Mat:
    """
    Matriz da multiplicação por `poly`: R_source -> R_{source + deg(poly)}.

    Colunas indexadas por monomials(source_degree), linhas por monomials(alvo).
    """
    target = source_degree + poly.degree
    tindex = monomial_index(target)
    mat = fld.zeros(hilbert_count(target), hilbert_count(source_degree))
    for j, e in enumerate(monomials(source_degree)):
        for f, c in poly.terms.items():
            i = tindex[(e[0] + f[0], e[1] + f[1], e[2] + f[2])]
            mat[i, j] = c
    return Mat(fld, mat)


# -----------------------------------------------
# Matrizes polinomiais graduadas
# -----------------------------------------------

@dataclass(frozen=True)
class PolyMatrix:
    """
    Matriz de formas homogêneas com twists nas linhas e colunas.

    A linha i corresponde ao somando O(-row_twists[i]) do alvo e a coluna j
    ao somando O(-col_twists[j]) da fonte; a entrada (i, j) tem grau
    col_twists[j] - row_twists[i] e é nula quando esse grau é negativo.
    """

    field: Field
    row_twists: Tuple[int, ...]
    col_twists: Tuple[int, ...]
    entries: Tuple[Tuple[HPoly, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != len(self.row_twists):
            raise ShapeError("Número de linhas incompatível com os twists")
        for i, row in enumerate(self.entries):
            if len(row) != len(self.col_twists):
                raise ShapeError("Número de colunas incompatível com os twists")
            for j, entry in enumerate(row):
                expected = self.col_twists[j] - self.row_twists[i]
                if not entry.is_zero() and entry.degree != expected:
                    raise ShapeError(
                        f"Entrada ({i},{j}) de grau {entry.degree}, esperado {expected}"
                    )

    __hash__ = None  # type: ignore[assignment]

    @classmethod
    def build(
        cls,
        fld: Field,
        row_twists: Sequence[int],
        col_twists: Sequence[int],
        entries: Sequence[Sequence[Optional[HPoly]]],
    ) -> "PolyMatrix":
        """Constrói a matriz trocando None por zeros do grau forçado."""
        rows = []
        for i, r in enumerate(row_twists):
            row = []
            for j, c in enumerate(col_twists):
                e = entries[i][j]
                row.append(e if e is not None else HPoly.zero(fld, c - r))
            rows.append(tuple(row))
        return cls(fld, tuple(row_twists), tuple(col_twists), tuple(rows))

    @classmethod
    def random(
        cls,
        fld: Field,
        row_twists: Sequence[int],
        col_twists: Sequence[int],
        rng: np.random.Generator,
        minimal: bool = True,
    ) -> "PolyMatrix":
        """
        Matriz aleatória do formato dado.

        Com minimal=True as entradas constantes são anuladas, como em
        ``B - sub(B, {x=>0, y=>0, z=>0})``.
        """
        rows = []
        for r in row_twists:
            row = []
            for c in col_twists:
                deg = c - r
                if deg < 0 or (minimal and deg == 0):
                    row.append(HPoly.zero(fld, deg))
                else:
                    row.append(HPoly.random(fld, deg, rng))
            rows.append(row)
        return cls.build(fld, row_twists, col_twists, rows)

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.row_twists), len(self.col_twists)

    def entry(self, i: int, j: int) -> HPoly:
        return self.entries[i][j]

    def is_minimal(self) -> bool:
        return all(
            e.is_zero()
            for i, row in enumerate(self.entries)
            for j, e in enumerate(row)
            if self.col_twists[j] - self.row_twists[i] == 0
        )

    def column(self, j: int) -> List[HPoly]:
        return [row[j] for row in self.entries]

    def with_columns(self, cols: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix.build(
            self.field,
            self.row_twists,
            [self.col_twists[j] for j in cols],
            [[row[j] for j in cols] for row in self.entries],
        )

    def with_rows(self, rows: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix.build(
            self.field,
            [self.row_twists[i] for i in rows],
            self.col_twists,
            [self.entries[i] for i in rows],
        )

    def substitute_linear(self, A: Sequence[Sequence[Any]]) -> "PolyMatrix":
        return PolyMatrix.build(
            self.field,
            self.row_twists,
            self.col_twists,
            [[e.substitute_linear(A) for e in row] for row in self.entries],
        )

    def determinant(self) -> HPoly:
        """Determinante por expansão de Laplace memoizada (matriz quadrada)."""
        n, m = self.shape
        if n != m:
            raise ShapeError("Determinante de matriz polinomial não quadrada")
        degree = sum(self.col_twists) - sum(self.row_twists)
        memo: Dict[Tuple[int, frozenset], HPoly] = {}

        def expand(r: int, cols: frozenset) -> HPoly:
            if r == n:
                return HPoly.monomial(self.field, (0, 0, 0), 1)
            key = (r, cols)
            if key in memo:
                return memo[key]
            target = sum(self.col_twists[c] for c in cols) - sum(self.row_twists[r:])
            acc = HPoly.zero(self.field, target)
            ordered = sorted(cols)
            for pos, c in enumerate(ordered):
                e = self.entries[r][c]
                if e.is_zero():
                    continue
                sub = expand(r + 1, cols - {c})
                if sub.is_zero():
                    continue
                term = e * sub
                acc = acc + (term if pos % 2 == 0 else -term)
            memo[key] = acc
            return acc

        result = expand(0, frozenset(range(m)))
        return result if not result.is_zero() else HPoly.zero(self.field, degree)


def maximal_minors(pm: PolyMatrix) -> List[HPoly]:
    """
    Menores maximais com sinal de uma matriz (m+1) x m.

    O i-ésimo menor é (-1)^i vezes o determinante obtido removendo a linha i;
    seu grau é sum(col_twists) - sum(row_twists) + row_twists[i].

    Raises:
        ShapeError: Se a matriz não tem exatamente uma linha a mais que colunas.
    """
    rows, cols = pm.shape
    if cols < 1 or rows != cols + 1:
        raise ShapeError(f"Menores maximais exigem formato (m+1) x m, recebido {rows}x{cols}")
    minors = []
    for i in range(rows):
        keep = [k for k in range(rows) if k != i]
        det = pm.with_rows(keep).determinant()
        minors.append(det if i % 2 == 0 else -det)
    return minors


def random_invertible(fld: Field, n: int, rng: np.random.Generator) -> Mat:
    """Matriz aleatória invertível (rejeição até posto cheio)."""
    for _ in range(100):
        m = Mat.random(fld, n, n, rng)
        if m.rank() == n:
            return m
    raise ShapeError("Não foi possível sortear matriz invertível")


def _native(value: Any) -> Any:
    """Converte escalares numpy para int/Fraction do Python."""
    return int(value) if isinstance(value, np.integer) else value
