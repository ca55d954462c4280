"""Maximal minors of M as exact polynomials in T1..Tn and their gcd.

Minors are expanded in worker processes when more than one worker is
configured; each worker receives plain integer column data and returns the
determinant's terms, so nothing sympy-specific crosses the process boundary.
"""
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from itertools import combinations
from math import comb, lcm
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict
from sympy import symbols
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix

from toric_implicit.config import MINOR_SIZE_GUARD, THREADS
from toric_implicit.core.errors import NonSquareError, SizeGuardError
from toric_implicit.core.implicit.forms import ImplicitForm, variable_names
from toric_implicit.core.syzygy.representation import RepresentationMatrix
from toric_implicit.utils.logger_config import get_logger

logger = get_logger("repmat")

# {row: {column: (c_1, .., c_n)}}, entry sum_i c_i * T_i
IntegerColumns = Dict[int, Dict[int, Tuple[int, ...]]]
Terms = Dict[Tuple[int, ...], int]


class MinorGcdResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    form: Optional[ImplicitForm]
    columns: Tuple[Tuple[int, ...], ...]
    stabilized: bool
    exhaustive: bool

    @property
    def degree(self) -> int:
        return self.form.degree if self.form is not None else 0


@lru_cache(maxsize=8)
def _ring(nvars: int):
    return ZZ.poly_ring(*symbols(variable_names(nvars)))


def integer_columns(M: RepresentationMatrix, columns: Sequence[int]) -> IntegerColumns:
    """The chosen columns of M(T), each scaled by the lcm of its denominators."""
    if not M.field.is_rational:
        raise ValueError("symbolic minors need a rational representation matrix")
    rows: Dict[int, Dict[int, List[int]]] = {}
    for k, c in enumerate(columns):
        blocks = [m.column(c) for m in M.coeff_matrices]
        scale = lcm(1, *(v.denominator for block in blocks for v in block.values()))
        for var, block in enumerate(blocks):
            for r, v in block.items():
                coeffs = rows.setdefault(r, {}).setdefault(k, [0] * M.nvars)
                coeffs[var] = int(v * scale)
    return {r: {k: tuple(c) for k, c in row.items()} for r, row in rows.items()}


def _domain_matrix(data: IntegerColumns, shape: Tuple[int, int], nvars: int) -> DomainMatrix:
    domain = _ring(nvars)
    gens = domain.ring.gens
    rows = {}
    for r, row in data.items():
        entries = {k: sum((g * c for g, c in zip(gens, coeffs) if c), domain.zero) for k, coeffs in row.items()}
        entries = {k: e for k, e in entries.items() if e}
        if entries:
            rows[r] = entries
    return DomainMatrix(rows, shape, domain)


def polynomial_matrix(M: RepresentationMatrix, columns: Sequence[int]) -> DomainMatrix:
    """The columns of M(T) over ZZ[T1..Tn]."""
    columns = list(columns)
    return _domain_matrix(integer_columns(M, columns), (M.rows, len(columns)), M.nvars)


def _minor_terms(task: Tuple[IntegerColumns, int, int]) -> Terms:
    data, size, nvars = task
    det = _domain_matrix(data, (size, size), nvars).to_dense().det()
    return {tuple(m): int(c) for m, c in det.items()}


def sample_column_sets(rows: int, cols: int, count: int, seed: int) -> Tuple[List[Tuple[int, ...]], bool]:
    """``count`` distinct sorted column subsets of size ``rows``; all of them when there are few enough."""
    total = comb(cols, rows)
    if total <= count:
        return list(combinations(range(cols), rows)), True
    rng = np.random.default_rng(seed)
    seen, chosen = set(), []
    while len(chosen) < count:
        subset = tuple(sorted(int(c) for c in rng.choice(cols, size=rows, replace=False)))
        if subset not in seen:
            seen.add(subset)
            chosen.append(subset)
    return chosen, False


def minor_gcd(M: RepresentationMatrix, sample_count: int, seed: int = 0,
              workers: int = THREADS) -> MinorGcdResult:
    """gcd of ``sample_count`` random maximal minors of M.

    A multiple of the gcd of all maximal minors; ``stabilized`` says the last
    minor left the running gcd unchanged. The result does not depend on
    ``workers``.
    """
    if M.rows > MINOR_SIZE_GUARD:
        raise SizeGuardError(f"{M.rows} rows exceed the symbolic minor limit of {MINOR_SIZE_GUARD}")
    if M.rows > M.cols:
        raise ValueError(f"a {M.rows}x{M.cols} matrix has no maximal minors of size {M.rows}")
    subsets, exhaustive = sample_column_sets(M.rows, M.cols, sample_count, seed)
    tasks = [(integer_columns(M, subset), M.rows, M.nvars) for subset in subsets]

    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=min(workers, len(tasks))) as pool:
            terms = list(pool.map(_minor_terms, tasks))
    else:
        terms = [_minor_terms(task) for task in tasks]
    ring = _ring(M.nvars).ring
    minors = [ring.from_dict(t) if t else ring.zero for t in terms]

    running = previous = None
    for det in minors:
        previous = running
        running = det if running is None else running.gcd(det)
    stabilized = exhaustive or (previous is not None and bool(previous) and
                                ImplicitForm.from_poly_element(previous, M.nvars)
                                == ImplicitForm.from_poly_element(running, M.nvars))
    form = ImplicitForm.from_poly_element(running, M.nvars) if running else None
    logger.info("Minor gcd computed", extra={"minors": len(subsets), "degree": form.degree if form else 0,
                                             "stabilized": stabilized, "workers": workers})
    return MinorGcdResult(form=form, columns=tuple(subsets), stabilized=stabilized, exhaustive=exhaustive)


def curve_determinant(M: RepresentationMatrix) -> ImplicitForm:
    """det M(T) of a square matrix, normalized."""
    if M.rows != M.cols:
        raise NonSquareError(f"determinant needs a square matrix, got {M.rows}x{M.cols}")
    det = polynomial_matrix(M, range(M.cols)).to_dense().det()
    if not det:
        raise ValueError("M(T) is singular for every T")
    return ImplicitForm.from_poly_element(det, M.nvars)
