"""
Exact scalars and dense-by-contract, sparse-by-storage matrices over QQ or GF(p).

All elimination goes through sympy's ``DomainMatrix``. Rational matrices are
first scaled row by row to integer matrices and reduced fraction-free over ZZ
(``rref_den``), so no intermediate rounding or denominator growth happens
mid-pivot. Reduced row echelon forms are unique, which makes every basis this
module returns independent of pivoting details.
"""
from fractions import Fraction
from functools import lru_cache
from math import lcm, prod
from typing import Any, Dict, Iterator, List, Mapping, NamedTuple, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator
from sympy import isprime
from sympy.polys.domains import GF, QQ, ZZ
from sympy.polys.matrices import DomainMatrix

from toric_implicit.config import DEFAULT_PRIME
from toric_implicit.core.errors import DivisionByZeroError, NonSquareError

Scalar = Union[Fraction, int]


class FieldSpec(BaseModel):
    """Field tag shared by all entries of a matrix: exact rationals, or residues mod a prime."""

    model_config = ConfigDict(frozen=True)

    prime: Optional[int] = Field(default=None, description="Modulus of the prime field; None for QQ")

    @field_validator("prime")
    @classmethod
    def _check_prime(cls, value):
        if value is not None and not isprime(value):
            raise ValueError(f"{value} is not prime")
        return value

    @property
    def is_rational(self) -> bool:
        return self.prime is None

    @property
    def label(self) -> str:
        return "rational" if self.prime is None else f"GF({self.prime})"

    def reduce(self, value: Any) -> Scalar:
        """Normalize a python number into this field's canonical scalar."""
        q = Fraction(value)
        if self.prime is None:
            return q
        p = self.prime
        den = q.denominator % p
        if den == 0:
            raise DivisionByZeroError(f"denominator of {q} vanishes modulo {p}")
        return (q.numerator % p) * pow(den, -1, p) % p


RATIONAL = FieldSpec()


def prime_field(prime: Optional[int] = None) -> FieldSpec:
    return FieldSpec(prime=prime or DEFAULT_PRIME)


@lru_cache(maxsize=None)
def _gf(prime: int):
    return GF(prime, symmetric=False)


def domain_of(field: FieldSpec):
    return QQ if field.prime is None else _gf(field.prime)


def to_domain(value: Any, field: FieldSpec):
    v = field.reduce(value)
    if field.prime is None:
        return QQ(v.numerator, v.denominator)
    return _gf(field.prime)(v)


def from_domain(elem, field: FieldSpec) -> Scalar:
    if field.prime is None:
        return Fraction(int(QQ.numer(elem)), int(QQ.denom(elem)))
    return int(_gf(field.prime).to_int(elem)) % field.prime


class ExactMatrix:
    """Immutable matrix of exact scalars.

    Storage is a row-major map ``{row: {col: element}}`` of sympy domain
    elements with zeros omitted; the public surface speaks python ``Fraction``
    (rational field) or ``int`` residues (prime field).
    """

    __slots__ = ("_rows", "_shape", "field")

    def __init__(self, rows: Mapping[int, Mapping[int, Any]], shape: Tuple[int, int], field: FieldSpec = RATIONAL):
        self._shape = (int(shape[0]), int(shape[1]))
        self.field = field
        self._rows: Dict[int, Dict[int, Any]] = {
            i: {j: v for j, v in row.items() if v} for i, row in rows.items()
        }
        self._rows = {i: row for i, row in self._rows.items() if row}

    # construction -------------------------------------------------------

    @classmethod
    def from_entries(cls, entries: Mapping[Tuple[int, int], Any], shape: Tuple[int, int],
                     field: FieldSpec = RATIONAL) -> "ExactMatrix":
        rows: Dict[int, Dict[int, Any]] = {}
        for (i, j), value in entries.items():
            if not 0 <= i < shape[0] or not 0 <= j < shape[1]:
                raise IndexError(f"entry ({i}, {j}) outside shape {shape}")
            elem = to_domain(value, field)
            if elem:
                rows.setdefault(i, {})[j] = elem
        return cls(rows, shape, field)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]], field: FieldSpec = RATIONAL,
                  cols: Optional[int] = None) -> "ExactMatrix":
        ncols = cols if cols is not None else (len(rows[0]) if rows else 0)
        entries = {}
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise ValueError(f"row {i} has {len(row)} entries, expected {ncols}")
            for j, value in enumerate(row):
                if value:
                    entries[(i, j)] = value
        return cls.from_entries(entries, (len(rows), ncols), field)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: FieldSpec = RATIONAL) -> "ExactMatrix":
        return cls({}, (rows, cols), field)

    @classmethod
    def identity(cls, n: int, field: FieldSpec = RATIONAL) -> "ExactMatrix":
        return cls.from_entries({(i, i): 1 for i in range(n)}, (n, n), field)

    @classmethod
    def from_domain_matrix(cls, dm: DomainMatrix, field: FieldSpec) -> "ExactMatrix":
        return cls(_sparse_rows(dm), dm.shape, field)

    # inspection ---------------------------------------------------------

    @property
    def rows(self) -> int:
        return self._shape[0]

    @property
    def cols(self) -> int:
        return self._shape[1]

    @property
    def shape(self) -> Tuple[int, int]:
        return self._shape

    @property
    def domain(self):
        return domain_of(self.field)

    def entry(self, i: int, j: int) -> Scalar:
        elem = self._rows.get(i, {}).get(j)
        return self.field.reduce(0) if elem is None else from_domain(elem, self.field)

    def column(self, j: int) -> Dict[int, Scalar]:
        return {i: from_domain(row[j], self.field) for i, row in sorted(self._rows.items()) if j in row}

    def nonzero_entries(self) -> Iterator[Tuple[Tuple[int, int], Scalar]]:
        for i in sorted(self._rows):
            for j in sorted(self._rows[i]):
                yield (i, j), from_domain(self._rows[i][j], self.field)

    def to_rows(self) -> List[List[Scalar]]:
        zero = self.field.reduce(0)
        out = [[zero] * self.cols for _ in range(self.rows)]
        for (i, j), value in self.nonzero_entries():
            out[i][j] = value
        return out

    def is_zero(self) -> bool:
        return not self._rows

    def to_domain_matrix(self) -> DomainMatrix:
        return DomainMatrix({i: dict(r) for i, r in self._rows.items()}, self._shape, self.domain)

    # algebra ------------------------------------------------------------

    def transpose(self) -> "ExactMatrix":
        rows: Dict[int, Dict[int, Any]] = {}
        for i, row in self._rows.items():
            for j, v in row.items():
                rows.setdefault(j, {})[i] = v
        return ExactMatrix(rows, (self.cols, self.rows), self.field)

    def split_rows(self, parts: int) -> List["ExactMatrix"]:
        """Cut into ``parts`` equal horizontal blocks, top to bottom."""
        if parts < 1 or self.rows % parts:
            raise ValueError(f"cannot split {self.rows} rows into {parts} blocks")
        height = self.rows // parts
        blocks: List[Dict[int, Dict[int, Any]]] = [{} for _ in range(parts)]
        for i, row in self._rows.items():
            blocks[i // height][i % height] = row
        return [ExactMatrix(b, (height, self.cols), self.field) for b in blocks]

    def scale(self, factor: Any) -> "ExactMatrix":
        c = to_domain(factor, self.field)
        return ExactMatrix({i: {j: v * c for j, v in row.items()} for i, row in self._rows.items()},
                           self._shape, self.field)

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_compatible(other)
        rows = {i: dict(row) for i, row in self._rows.items()}
        for i, row in other._rows.items():
            target = rows.setdefault(i, {})
            for j, v in row.items():
                target[j] = target.get(j, self.domain.zero) + v
        return ExactMatrix(rows, self._shape, self.field)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.field != other.field:
            raise ValueError("matrices live over different fields")
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        product = self.to_domain_matrix().matmul(other.to_domain_matrix())
        return ExactMatrix.from_domain_matrix(product, self.field)

    def _check_compatible(self, other: "ExactMatrix") -> None:
        if self.field != other.field or self.shape != other.shape:
            raise ValueError(f"incompatible matrices {self.shape}/{self.field.label} and "
                             f"{other.shape}/{other.field.label}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self._rows == other._rows

    __hash__ = None

    def __repr__(self) -> str:
        nnz = sum(len(r) for r in self._rows.values())
        return f"ExactMatrix({self.rows}x{self.cols}, {self.field.label}, nnz={nnz})"


def linear_combination(coefficients: Sequence[Any], matrices: Sequence[ExactMatrix]) -> ExactMatrix:
    """Sum of c_i * A_i over the common field of the A_i."""
    if len(coefficients) != len(matrices) or not matrices:
        raise ValueError("need one coefficient per matrix")
    first = matrices[0]
    zero = first.domain.zero
    rows: Dict[int, Dict[int, Any]] = {}
    for c, m in zip(coefficients, matrices):
        first._check_compatible(m)
        ce = to_domain(c, first.field)
        if not ce:
            continue
        for i, row in m._rows.items():
            target = rows.setdefault(i, {})
            for j, v in row.items():
                target[j] = target.get(j, zero) + ce * v
    return ExactMatrix(rows, first.shape, first.field)


# elimination ---------------------------------------------------------------


class _Echelon(NamedTuple):
    rows: Dict[int, Dict[int, Any]]
    denom: Any
    pivots: Tuple[int, ...]


def _sparse_rows(dm: DomainMatrix) -> Dict[int, Dict[int, Any]]:
    return {i: dict(row) for i, row in dm.to_sparse().rep.items()}


def _integral(m: ExactMatrix) -> Tuple[DomainMatrix, List[int]]:
    """Scale each row by the lcm of its denominators; returns the ZZ matrix and the scales."""
    rows: Dict[int, Dict[int, Any]] = {}
    scales = [1] * m.rows
    for i, row in m._rows.items():
        scale = lcm(*(int(QQ.denom(v)) for v in row.values()))
        scales[i] = scale
        rows[i] = {j: ZZ(int(QQ.numer(v)) * (scale // int(QQ.denom(v)))) for j, v in row.items()}
    return DomainMatrix(rows, m.shape, ZZ), scales


def _echelon(m: ExactMatrix) -> _Echelon:
    if m.rows == 0 or m.cols == 0 or m.is_zero():
        return _Echelon({}, m.domain.one, ())
    if m.field.is_rational:
        reduced, denom, pivots = _integral(m)[0].rref_den()
        return _Echelon(_sparse_rows(reduced), denom, tuple(pivots))
    reduced, pivots = m.to_domain_matrix().rref()
    return _Echelon(_sparse_rows(reduced), m.domain.one, tuple(pivots))


def rank(m: ExactMatrix) -> int:
    return len(_echelon(m).pivots)


def _reduced(m: ExactMatrix) -> ExactMatrix:
    """Reduced row echelon form with unit pivots."""
    ech = _echelon(m)
    if not m.field.is_rational:
        return ExactMatrix(ech.rows, m.shape, m.field)
    den = int(ech.denom)
    rows = {i: {j: QQ(int(a), den) for j, a in row.items()} for i, row in ech.rows.items()}
    return ExactMatrix(rows, m.shape, m.field)


def nullspace(m: ExactMatrix) -> ExactMatrix:
    """Basis of the right kernel as the columns of a ``cols x (cols - rank)`` matrix.

    The basis is in reduced column echelon form: the first nonzero entry of
    column k is a 1 whose row holds zeros in every other column, and those
    rows increase with k. It is read off the free variables of the reduced
    echelon form of m, then reduced once more as a set of row vectors.
    """
    ech = _echelon(m)
    pivot_set = set(ech.pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    free_index = {j: k for k, j in enumerate(free)}
    dom = m.domain
    rows: Dict[int, Dict[int, Any]] = {j: {k: dom.one} for k, j in enumerate(free)}

    if m.field.is_rational:
        den = int(ech.denom)

        def negated(a):
            return QQ(-int(a), den)
    else:
        def negated(a):
            return -a

    for i, pc in enumerate(ech.pivots):
        for j, a in ech.rows.get(i, {}).items():
            if j != pc and a:
                rows.setdefault(pc, {})[free_index[j]] = negated(a)
    basis = ExactMatrix(rows, (m.cols, len(free)), m.field)
    if not free:
        return basis
    return _reduced(basis.transpose()).transpose()


def determinant(m: ExactMatrix) -> Scalar:
    if m.rows != m.cols:
        raise NonSquareError(f"determinant needs a square matrix, got {m.rows}x{m.cols}")
    if m.rows == 0:
        return m.field.reduce(1)
    if m.field.is_rational:
        zz, scales = _integral(m)
        return Fraction(int(zz.det()), prod(scales))
    return from_domain(m.to_domain_matrix().det(), m.field)


def change_field(m: ExactMatrix, field: FieldSpec) -> ExactMatrix:
    """Reduce a rational matrix into another field (identity when the fields agree)."""
    if field == m.field:
        return m
    if not m.field.is_rational:
        raise ValueError("only rational matrices can be moved to another field")
    return ExactMatrix.from_entries(dict(m.nonzero_entries()), m.shape, field)

