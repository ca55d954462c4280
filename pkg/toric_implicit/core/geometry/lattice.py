import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, field_validator
from sympy.geometry import convex_hull as sympy_convex_hull

from toric_implicit.core.errors import DegenerateSupport

Point = Tuple[int, int]


def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


class LatticePolygon(BaseModel):
    """Convex lattice polygon, vertices counter-clockwise from the lexicographically smallest one."""

    model_config = ConfigDict(frozen=True)

    vertices: Tuple[Tuple[int, int], ...]

    @field_validator("vertices")
    @classmethod
    def _normalize(cls, vertices):
        vertices = tuple((int(x), int(y)) for x, y in vertices)
        if len(vertices) < 3:
            raise DegenerateSupport(f"a polygon needs 3 vertices, got {len(vertices)}")
        twice_area = sum(
            a[0] * b[1] - a[1] * b[0] for a, b in zip(vertices, vertices[1:] + vertices[:1])
        )
        if twice_area == 0:
            raise DegenerateSupport("vertices span no area")
        if twice_area < 0:
            vertices = vertices[::-1]
        n = len(vertices)
        for i in range(n):
            if _cross(vertices[i - 1], vertices[i], vertices[(i + 1) % n]) <= 0:
                raise ValueError(f"vertex {vertices[i]} breaks strict convexity")
        start = vertices.index(min(vertices))
        return vertices[start:] + vertices[:start]

    @classmethod
    def rectangle(cls, width: int, height: int) -> "LatticePolygon":
        return cls(vertices=((0, 0), (width, 0), (width, height), (0, height)))

    def edges(self) -> Iterable[Tuple[Point, Point]]:
        return zip(self.vertices, self.vertices[1:] + self.vertices[:1])

    def bounding_box(self) -> Tuple[Point, Point]:
        xs = [x for x, _ in self.vertices]
        ys = [y for _, y in self.vertices]
        return (min(xs), min(ys)), (max(xs), max(ys))

    def contains(self, point: Point, strict: bool = False) -> bool:
        for a, b in self.edges():
            c = _cross(a, b, point)
            if c < 0 or (strict and c == 0):
                return False
        return True

    def to_list(self) -> List[List[int]]:
        return [list(v) for v in self.vertices]

    def __str__(self) -> str:
        return " ".join(f"({x},{y})" for x, y in self.vertices)


def affine_dimension(points: Iterable[Point]) -> int:
    """-1 for no points, 0 for one point, 1 for a segment, 2 otherwise."""
    pts = sorted(set(points))
    if not pts:
        return -1
    if len(pts) == 1:
        return 0
    o, a = pts[0], pts[-1]
    if any(_cross(o, a, p) != 0 for p in pts):
        return 2
    return 1


def convex_hull(points: Iterable[Point]) -> LatticePolygon:
    """Vertices of the convex hull, computed exactly by sympy; points on edges are not vertices."""
    pts = sorted(set((int(x), int(y)) for x, y in points))
    if affine_dimension(pts) < 2:
        raise DegenerateSupport(f"points {pts[:4]}{'...' if len(pts) > 4 else ''} are not two-dimensional")
    hull = sympy_convex_hull(*pts, polygon=True)
    return LatticePolygon(vertices=[(int(v.x), int(v.y)) for v in hull.vertices])


def dilate(polygon: LatticePolygon, n: int) -> LatticePolygon:
    if n < 1:
        raise ValueError(f"dilation factor must be >= 1, got {n}")
    if n == 1:
        return polygon
    return LatticePolygon(vertices=[(n * x, n * y) for x, y in polygon.vertices])


def translate(polygon: LatticePolygon, dx: int, dy: int) -> LatticePolygon:
    return LatticePolygon(vertices=[(x + dx, y + dy) for x, y in polygon.vertices])


def _row_range(polygon: LatticePolygon, y: int, strict: bool) -> Optional[Tuple[int, int]]:
    # every edge a->b gives a half-plane; at fixed y it bounds x from one side
    lo: Optional[Fraction] = None
    hi: Optional[Fraction] = None
    for (ax, ay), (bx, by) in polygon.edges():
        ex, ey = bx - ax, by - ay
        rhs = ex * (y - ay)
        if ey == 0:
            if rhs < 0 or (strict and rhs == 0):
                return None
            continue
        bound = Fraction(rhs + ey * ax, ey)
        if ey > 0:
            hi = bound if hi is None else min(hi, bound)
        else:
            lo = bound if lo is None else max(lo, bound)
    if strict:
        first, last = math.floor(lo) + 1, math.ceil(hi) - 1
    else:
        first, last = math.ceil(lo), math.floor(hi)
    if first > last:
        return None
    return first, last


@lru_cache(maxsize=256)
def _scan(polygon: LatticePolygon, strict: bool) -> Tuple[Point, ...]:
    (_, ymin), (_, ymax) = polygon.bounding_box()
    rows = {}
    for y in range(ymin, ymax + 1):
        span = _row_range(polygon, y, strict)
        if span is not None:
            rows[y] = span
    points = [(x, y) for y, (first, last) in rows.items() for x in range(first, last + 1)]
    return tuple(sorted(points))


def lattice_points(polygon: LatticePolygon) -> List[Point]:
    """All integer points of the polygon, boundary included, sorted by (x, y)."""
    return list(_scan(polygon, False))


def interior_lattice_points(polygon: LatticePolygon) -> List[Point]:
    return list(_scan(polygon, True))


def boundary_lattice_count(polygon: LatticePolygon) -> int:
    return sum(math.gcd(bx - ax, by - ay) for (ax, ay), (bx, by) in polygon.edges())


def normalized_area(polygon: LatticePolygon) -> int:
    """Twice the Euclidean area (shoelace)."""
    return abs(sum(ax * by - ay * bx for (ax, ay), (bx, by) in polygon.edges()))


def alpha(polygon: LatticePolygon) -> int:
    """Largest i in {0, 1, 2} whose dilation i*Q has no interior lattice point.

    Every lattice polygon acquires an interior point by its third dilation, so
    only i = 1 and i = 2 need checking.
    """
    for i in (1, 2):
        if interior_lattice_points(dilate(polygon, i)):
            return i - 1
    return 2
