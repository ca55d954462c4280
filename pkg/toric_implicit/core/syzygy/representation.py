from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from toric_implicit.core.embed.newton import newton_data
from toric_implicit.core.embed.toric_embedding import GradedMap, build_embedding, monomial_values
from toric_implicit.core.geometry.lattice import LatticePolygon, dilate
from toric_implicit.core.linalg.exact_linalg import (
    RATIONAL,
    ExactMatrix,
    FieldSpec,
    linear_combination,
    nullspace,
)
from toric_implicit.core.poly.polynomial import Parametrization
from toric_implicit.core.syzygy.system import SyzygySystem, syzygy_system
from toric_implicit.utils.logger_config import get_logger

logger = get_logger("syzygy")


class RepresentationMatrix(BaseModel):
    """M_nu = sum_i T_i * M^(i), with rows indexed by ``row_basis``.

    Surfaces carry four coefficient matrices and a polytope; the curve variant
    carries three and no polytope.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    row_basis: Tuple[Tuple[int, ...], ...]
    coeff_matrices: Tuple[ExactMatrix, ...]
    nu: int
    d: int
    polytope: Optional[LatticePolygon] = None
    field: FieldSpec = RATIONAL

    @model_validator(mode="after")
    def _check_blocks(self):
        if not self.coeff_matrices:
            raise ValueError("a representation matrix needs coefficient matrices")
        shape = self.coeff_matrices[0].shape
        for m in self.coeff_matrices:
            if m.shape != shape or m.field != self.field:
                raise ValueError("coefficient matrices disagree on shape or field")
        if shape[0] != len(self.row_basis):
            raise ValueError(f"{shape[0]} rows but {len(self.row_basis)} basis points")
        return self

    @property
    def rows(self) -> int:
        return self.coeff_matrices[0].rows

    @property
    def cols(self) -> int:
        return self.coeff_matrices[0].cols

    @property
    def shape(self) -> Tuple[int, int]:
        return self.coeff_matrices[0].shape

    @property
    def nvars(self) -> int:
        return len(self.coeff_matrices)

    @property
    def probabilistic(self) -> bool:
        """Prime-field results may differ from the rational ones on unlucky primes."""
        return not self.field.is_rational

    def syzygy(self, k: int) -> List[Dict[int, Any]]:
        """Column k read back as (h_1, .., h_n), each a sparse map row -> coefficient."""
        return [m.column(k) for m in self.coeff_matrices]


def representation_from_system(system: SyzygySystem, d: int,
                               polytope: Optional[LatticePolygon] = None) -> RepresentationMatrix:
    kernel = nullspace(system.matrix)
    blocks = kernel.split_rows(system.generators)
    rep = RepresentationMatrix(row_basis=system.source, coeff_matrices=tuple(blocks), nu=system.nu,
                               d=d, polytope=polytope, field=system.matrix.field)
    if rep.rows > rep.cols:
        logger.warning("M_nu has more rows than columns; nu=%d is probably below the regularity bound",
                       system.nu, extra={"rows": rep.rows, "cols": rep.cols})
    logger.info("Representation matrix ready", extra={"nu": system.nu, "rows": rep.rows, "cols": rep.cols})
    return rep


def syzygy_matrix(g: GradedMap, nu: int, field: FieldSpec = RATIONAL) -> RepresentationMatrix:
    """Matrix of a basis of Syz(g)_nu with respect to the monomial basis of A_nu."""
    system = syzygy_system(g, nu, field)
    return representation_from_system(system, g.d, g.embedding.Q)


def grading_comparison(f: Parametrization, nuhat: int, Q: Optional[LatticePolygon] = None,
                       d: Optional[int] = None,
                       field: FieldSpec = RATIONAL) -> Tuple[RepresentationMatrix, RepresentationMatrix]:
    """Build M over (Q, d) at degree d*nuhat and over (d*Q, 1) at degree nuhat.

    Q and d default to N'(f) and the homothety factor; the second grading is
    the coarser one of N(f) itself.
    """
    if Q is None or d is None:
        nd = newton_data(f)
        Q, d = nd.Nprime, nd.d
    if d < 2:
        raise ValueError(f"grading comparison needs a homothety factor >= 2, got {d}")
    fine = syzygy_matrix(build_embedding(f, Q, d, label="Nprime"), d * nuhat, field)
    coarse = syzygy_matrix(build_embedding(f, dilate(Q, d), 1, label="N"), nuhat, field)
    if fine.shape != coarse.shape:
        logger.warning("Gradings disagree: %s over Q vs %s over d*Q", fine.shape, coarse.shape)
    return fine, coarse


def _field_coefficients(g: GradedMap, field: FieldSpec) -> List[Dict[Tuple[int, int], Any]]:
    return [{p: field.reduce(c) for p, c in coeffs.items()} for coeffs in g.coefficients]


def verify_syzygies(rep: RepresentationMatrix, g: GradedMap) -> List[int]:
    """Columns whose (h_1..h_4) fail sum h_i g_i = 0, checked by sparse convolution.

    Runs independently of the nullspace code; an empty list means every column is a syzygy.
    """
    gens = _field_coefficients(g, rep.field)
    reduce = rep.field.reduce
    failing = []
    for k in range(rep.cols):
        total: Dict[Tuple[int, int], Any] = {}
        for gi, hi in zip(gens, rep.syzygy(k)):
            for row, h in hi.items():
                px, py = rep.row_basis[row]
                for (x, y), c in gi.items():
                    key = (px + x, py + y)
                    total[key] = reduce(total.get(key, 0) + h * c)
        if any(v != 0 for v in total.values()):
            failing.append(k)
    if failing:
        logger.error("Columns failing the syzygy identity: %s", failing[:10])
    return failing


def substitution_residual(rep: RepresentationMatrix, g: GradedMap, s: Any, t: Any) -> List[Any]:
    """Row vector of basis monomials at (s, t) times M(g(s, t)); zero for a valid M."""
    field = rep.field
    row = [field.reduce(v) for v in monomial_values(rep.row_basis, s, t)]
    point = [field.reduce(v) for v in g.evaluate(s, t)]
    evaluated = linear_combination(point, rep.coeff_matrices)
    left = ExactMatrix.from_rows([row], field, cols=rep.rows)
    product = left @ evaluated
    return [product.entry(0, j) for j in range(rep.cols)]

