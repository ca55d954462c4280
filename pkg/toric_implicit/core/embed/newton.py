import math
from functools import reduce
from typing import List, Tuple

from pydantic import BaseModel, ConfigDict

from toric_implicit.core.geometry.lattice import LatticePolygon, convex_hull, translate
from toric_implicit.core.poly.polynomial import Parametrization
from toric_implicit.utils.logger_config import get_logger

logger = get_logger("embed")

PolytopeChoice = Tuple[str, LatticePolygon, int]


class NewtonData(BaseModel):
    """N(f) moved to the nonnegative quadrant, its homothety factor d and N'(f) with d*N' = N."""

    model_config = ConfigDict(frozen=True)

    N: LatticePolygon
    translation: Tuple[int, int]
    d: int
    Nprime: LatticePolygon


def newton_data(f: Parametrization) -> NewtonData:
    support = f.joint_support()
    hull = convex_hull(support)
    (minx, miny), _ = hull.bounding_box()
    shift = (-minx, -miny)
    N = translate(hull, *shift)

    v0 = N.vertices[0]
    diffs = [(x - v0[0], y - v0[1]) for x, y in N.vertices[1:]]
    d = reduce(math.gcd, (abs(c) for diff in diffs for c in diff))

    scaled = [(0, 0)] + [(dx // d, dy // d) for dx, dy in diffs]
    px = min(x for x, _ in scaled)
    py = min(y for _, y in scaled)
    Nprime = LatticePolygon(vertices=[(x - px, y - py) for x, y in scaled])

    logger.debug("Newton polygon computed", extra={"N": str(N), "d": d, "Nprime": str(Nprime)})
    return NewtonData(N=N, translation=shift, d=d, Nprime=Nprime)


def bidegree_rectangle(nd: NewtonData) -> Tuple[LatticePolygon, int]:
    """Read N's bounding box [0,e1]x[0,e2] as a bidegree: Q = [0,e1/g]x[0,e2/g] with d = gcd(e1, e2)."""
    _, (e1, e2) = nd.N.bounding_box()
    g = math.gcd(e1, e2)
    return LatticePolygon.rectangle(e1 // g, e2 // g), g


def default_polytope_choices(nd: NewtonData) -> List[PolytopeChoice]:
    rectangle, g = bidegree_rectangle(nd)
    return [
        ("Nprime", nd.Nprime, nd.d),
        ("N", nd.N, 1),
        ("bidegree-rectangle", rectangle, g),
    ]
