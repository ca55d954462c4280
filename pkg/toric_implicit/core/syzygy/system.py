from typing import Any, Dict, Mapping, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from toric_implicit.core.embed.toric_embedding import GradedMap
from toric_implicit.core.geometry.lattice import alpha
from toric_implicit.core.linalg.exact_linalg import RATIONAL, ExactMatrix, FieldSpec
from toric_implicit.utils.logger_config import get_logger

logger = get_logger("syzygy")

Exponent = Tuple[int, ...]


class SyzygySystem(BaseModel):
    """Linear system whose kernel is the degree-nu part of Syz(g).

    Rows follow the target basis, columns are ordered generator-major:
    column ``i * len(source) + k`` holds h_i at ``source[k]``.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    nu: int
    source: Tuple[Exponent, ...]
    target: Tuple[Exponent, ...]
    generators: int
    matrix: ExactMatrix

    def column_of(self, i: int, p: Exponent) -> int:
        return i * len(self.source) + self.source.index(p)


def _add(p: Exponent, q: Exponent) -> Exponent:
    return tuple(a + b for a, b in zip(p, q))


def assemble_system(generators: Sequence[Mapping[Exponent, Any]], source: Sequence[Exponent],
                    target: Sequence[Exponent], field: FieldSpec = RATIONAL, nu: int = 0) -> SyzygySystem:
    """Entry (q, (i, p)) is the coefficient of generator i at q - p."""
    target_index = {q: r for r, q in enumerate(target)}
    n = len(source)
    entries: Dict[Tuple[int, int], Any] = {}
    for i, g in enumerate(generators):
        for k, p in enumerate(source):
            col = i * n + k
            for r, c in g.items():
                q = _add(p, r)
                if q not in target_index:
                    raise ValueError(f"product point {q} is missing from the target basis")
                entries[(target_index[q], col)] = c
    matrix = ExactMatrix.from_entries(entries, (len(target), len(generators) * n), field)
    logger.info("Syzygy system assembled", extra={"nu": nu, "rows": matrix.rows, "cols": matrix.cols,
                                                  "field": field.label})
    return SyzygySystem(nu=nu, source=tuple(source), target=tuple(target),
                        generators=len(generators), matrix=matrix)


def syzygy_system(g: GradedMap, nu: int, field: FieldSpec = RATIONAL) -> SyzygySystem:
    if nu < 0:
        raise ValueError(f"nu must be >= 0, got {nu}")
    e = g.embedding
    return assemble_system(g.coefficients, e.basis(nu), e.basis(nu + e.d), field, nu)


def default_nu(g: GradedMap) -> int:
    """The coarse regularity bound 2d - alpha(Q)."""
    return 2 * g.d - alpha(g.embedding.Q)
