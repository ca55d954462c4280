from math import comb, lcm
from typing import List, Optional, Sequence

from pydantic import BaseModel, ConfigDict

from toric_implicit.config import OVERSAMPLING, SAMPLE_HEIGHT
from toric_implicit.core.embed.newton import newton_data
from toric_implicit.core.errors import InsufficientSamples
from toric_implicit.core.geometry.lattice import normalized_area
from toric_implicit.core.implicit.forms import ImplicitForm, monomials
from toric_implicit.core.implicit.sampling import sample_surface_points
from toric_implicit.core.linalg.exact_linalg import RATIONAL, ExactMatrix, FieldSpec, nullspace, prime_field, rank
from toric_implicit.core.poly.polynomial import Parametrization
from toric_implicit.core.repmat.point import SurfacePoint
from toric_implicit.utils.logger_config import get_logger

logger = get_logger("implicit")


class ImplicitRecovery(BaseModel):
    model_config = ConfigDict(frozen=True)

    degree: Optional[int]
    forms: List[ImplicitForm]
    sample_count: int


def required_samples(degree: int, nvars: int = 4) -> int:
    return comb(degree + nvars - 1, nvars - 1) + OVERSAMPLING


def _integral_coordinates(point: SurfacePoint) -> List[int]:
    scale = lcm(*(c.denominator for c in point.coordinates))
    return [int(c * scale) for c in point.coordinates]


def evaluation_matrix(points: Sequence[SurfacePoint], degree: int, field: FieldSpec = RATIONAL) -> ExactMatrix:
    """Rows are points, columns the degree-D monomials in graded-lex order."""
    nvars = len(points[0])
    basis = monomials(degree, nvars)
    rows = []
    for point in points:
        coords = _integral_coordinates(point)
        row = []
        for m in basis:
            value = 1
            for c, e in zip(coords, m):
                if e:
                    value *= c ** e
            row.append(value)
        rows.append(row)
    return ExactMatrix.from_rows(rows, field, cols=len(basis))


def _check_count(points: Sequence[SurfacePoint], degree: int) -> None:
    needed = required_samples(degree, len(points[0]) if points else 4)
    if len(points) < needed:
        raise InsufficientSamples(f"degree {degree} needs {needed} points, got {len(points)}")


def vanishing_dimension(points: Sequence[SurfacePoint], degree: int, field: FieldSpec = RATIONAL) -> int:
    """Dimension of the space of degree-D forms vanishing on every point."""
    _check_count(points, degree)
    E = evaluation_matrix(points, degree, field)
    return E.cols - rank(E)


def interpolate_implicit(points: Sequence[SurfacePoint], degree: int) -> List[ImplicitForm]:
    """Normalized basis of the degree-D forms vanishing on ``points``; empty if there are none."""
    _check_count(points, degree)
    kernel = nullspace(evaluation_matrix(points, degree))
    nvars = len(points[0])
    size = len(monomials(degree, nvars))
    forms = []
    for k in range(kernel.cols):
        column = kernel.column(k)
        forms.append(ImplicitForm.from_vector(degree, [column.get(i, 0) for i in range(size)], nvars))
    return forms


def find_implicit_degree(points: Sequence[SurfacePoint], max_degree: int,
                         field: Optional[FieldSpec] = None, min_degree: int = 1) -> Optional[int]:
    """Smallest D in min_degree..max_degree with a vanishing form, scanned over a prime field."""
    field = field or prime_field()
    for degree in range(min_degree, max_degree + 1):
        dim = vanishing_dimension(points, degree, field)
        logger.debug("Vanishing forms", extra={"degree": degree, "dimension": dim})
        if dim > 0:
            return degree
    return None


def recover_implicit(f: Parametrization, max_degree: int, seed: int = 0, height: int = SAMPLE_HEIGHT,
                     sample_count: Optional[int] = None) -> ImplicitRecovery:
    """Sample f, find the minimal vanishing degree cheaply, then solve over the rationals there."""
    count = sample_count or required_samples(max_degree)
    points = sample_surface_points(f, count, seed, height)
    degree = find_implicit_degree(points, max_degree)
    while degree is not None:
        forms = interpolate_implicit(points, degree)
        if forms:
            logger.info("Implicit equation recovered", extra={"degree": degree, "forms": len(forms)})
            return ImplicitRecovery(degree=degree, forms=forms, sample_count=count)
        # the prime kernel was an accident of the modulus
        degree = find_implicit_degree(points, max_degree, min_degree=degree + 1)
    logger.info("No implicit equation up to the degree bound", extra={"max_degree": max_degree})
    return ImplicitRecovery(degree=None, forms=[], sample_count=count)


def expected_degree_product(f: Parametrization) -> int:
    """Normalized area of N(f): deg(g) * deg(S) plus the base-point multiplicities."""
    return normalized_area(newton_data(f).N)


def fresh_point_failures(form: ImplicitForm, f: Parametrization, count: int = 50, seed: int = 1,
                         height: int = SAMPLE_HEIGHT) -> int:
    """Number of freshly sampled surface points where ``form`` does not vanish."""
    return sum(1 for p in sample_surface_points(f, count, seed, height) if form.evaluate(p.coordinates) != 0)
