from fractions import Fraction
from typing import List

import numpy as np

from toric_implicit.config import SAMPLE_HEIGHT
from toric_implicit.core.errors import DivisionByZeroError, SamplingExhausted
from toric_implicit.core.poly.polynomial import Parametrization
from toric_implicit.core.repmat.point import SurfacePoint
from toric_implicit.utils.logger_config import get_logger

logger = get_logger("implicit")


def random_parameter(rng: np.random.Generator, height: int) -> Fraction:
    num = int(rng.integers(-height, height + 1))
    den = int(rng.integers(1, height + 1))
    return Fraction(num, den)


def sample_surface_points(f: Parametrization, count: int, seed: int = 0,
                          height: int = SAMPLE_HEIGHT) -> List[SurfacePoint]:
    """``count`` distinct image points f(s, t) at seeded rational parameters of height <= ``height``.

    Base points (all f_i zero) and parameters where a Laurent term is undefined are skipped.
    """
    rng = np.random.default_rng(seed)
    points: List[SurfacePoint] = []
    seen = set()
    attempts = 0
    while len(points) < count and attempts < 10 * count:
        attempts += 1
        s, t = random_parameter(rng, height), random_parameter(rng, height)
        try:
            values = f.evaluate(s, t)
        except DivisionByZeroError:
            continue
        if all(v == 0 for v in values):
            continue
        point = SurfacePoint(coordinates=values)
        if point in seen:
            continue
        seen.add(point)
        points.append(point)
    if len(points) < count:
        raise SamplingExhausted(f"only {len(points)} of {count} points after {attempts} attempts")
    logger.debug("Sampled surface points", extra={"count": count, "attempts": attempts})
    return points
