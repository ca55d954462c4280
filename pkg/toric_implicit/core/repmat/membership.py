from fractions import Fraction
from typing import Any, List, Optional

import numpy as np

from toric_implicit.config import GENERIC_RANK_HEIGHT, GENERIC_RANK_POINTS
from toric_implicit.core.linalg.exact_linalg import ExactMatrix, linear_combination, rank
from toric_implicit.core.repmat.point import MembershipVerdict, as_coordinates
from toric_implicit.core.syzygy.representation import RepresentationMatrix
from toric_implicit.utils.logger_config import get_logger

logger = get_logger("repmat")


def evaluate(M: RepresentationMatrix, point: Any) -> ExactMatrix:
    """sum_i P_i * M^(i); ``point`` is a SurfacePoint or a raw coordinate sequence."""
    coords = as_coordinates(point)
    if len(coords) != M.nvars:
        raise ValueError(f"point has {len(coords)} coordinates, matrix expects {M.nvars}")
    return linear_combination(coords, M.coeff_matrices)


def random_points(nvars: int, count: int, seed: int, height: int = GENERIC_RANK_HEIGHT) -> List[List[Fraction]]:
    rng = np.random.default_rng(seed)
    nums = rng.integers(-height, height + 1, size=(count, nvars))
    dens = rng.integers(1, height + 1, size=(count, nvars))
    return [[Fraction(int(n), int(d)) for n, d in zip(nrow, drow)] for nrow, drow in zip(nums, dens)]


def generic_rank(M: RepresentationMatrix, seed: int = 0) -> int:
    """Largest rank of M over a few seeded pseudo-random points; equals the row count for valid inputs."""
    best = 0
    for point in random_points(M.nvars, GENERIC_RANK_POINTS, seed):
        best = max(best, rank(evaluate(M, point)))
        if best == M.rows:
            break
    if best < M.rows:
        logger.warning("M is not generically of full rank", extra={"generic_rank": best, "rows": M.rows})
    return best


class MembershipOracle:
    """Rank-drop membership test with the generic rank computed once per matrix.

    The rank also drops on extraneous components of the base locus, so a
    positive answer means the point lies on the represented hypersurface,
    which may strictly contain the surface.
    """

    def __init__(self, M: RepresentationMatrix, seed: int = 0):
        self.M = M
        self.seed = seed
        self._generic_rank: Optional[int] = None

    @property
    def generic_rank(self) -> int:
        if self._generic_rank is None:
            self._generic_rank = generic_rank(self.M, self.seed)
        return self._generic_rank

    def verdict(self, point: Any) -> MembershipVerdict:
        evaluated = rank(evaluate(self.M, point))
        return MembershipVerdict(on_surface=evaluated < self.generic_rank, evaluated_rank=evaluated,
                                 generic_rank=self.generic_rank)

    __call__ = verdict


def is_on_surface(M: RepresentationMatrix, point: Any, seed: int = 0) -> MembershipVerdict:
    return MembershipOracle(M, seed).verdict(point)
