from fractions import Fraction
from threading import Lock
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from toric_implicit.core.errors import ContainmentError
from toric_implicit.core.geometry.lattice import LatticePolygon, dilate, lattice_points
from toric_implicit.core.poly.polynomial import BivariatePolynomial, Parametrization
from toric_implicit.utils.logger_config import get_logger

logger = get_logger("embed")

Point = Tuple[int, int]


class ToricEmbedding:
    """A polygon Q with scale d; degree-n monomial bases are the lattice points of n*Q.

    The basis cache is filled at most once per degree under a lock; readers of
    an already cached degree never wait.
    """

    def __init__(self, Q: LatticePolygon, d: int, label: Optional[str] = None):
        if d < 1:
            raise ValueError(f"embedding scale must be >= 1, got {d}")
        self.Q = Q
        self.d = d
        self.label = label or "custom"
        self._bases: Dict[int, Tuple[Point, ...]] = {}
        self._indices: Dict[int, Dict[Point, int]] = {}
        self._lock = Lock()

    def basis(self, n: int) -> Tuple[Point, ...]:
        if n not in self._bases:
            if n < 0:
                raise ValueError(f"degree must be >= 0, got {n}")
            with self._lock:
                if n not in self._bases:
                    points = ((0, 0),) if n == 0 else tuple(lattice_points(dilate(self.Q, n)))
                    self._indices[n] = {p: i for i, p in enumerate(points)}
                    self._bases[n] = points
        return self._bases[n]

    def index(self, n: int) -> Dict[Point, int]:
        self.basis(n)
        return self._indices[n]

    @property
    def ambient_dimension(self) -> int:
        """m, with the embedding landing in P^m."""
        return len(self.basis(1)) - 1

    def __repr__(self) -> str:
        return f"ToricEmbedding(label={self.label!r}, Q={self.Q}, d={self.d})"


def graded_basis(e: ToricEmbedding, n: int) -> List[Point]:
    return list(e.basis(n))


def monomial_values(points, s: Any, t: Any) -> List[Fraction]:
    """Values of s^x t^y at the given exponent points."""
    s, t = Fraction(s), Fraction(t)
    return [s ** x * t ** y for x, y in points]


class GradedMap(BaseModel):
    """g = (g1..g4) as elements of A_d: coefficients indexed by lattice points of d*Q."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    embedding: ToricEmbedding
    translation: Tuple[int, int]
    coefficients: Tuple[Dict[Tuple[int, int], Any], ...]

    @property
    def d(self) -> int:
        return self.embedding.d

    def vector(self, i: int) -> List[Fraction]:
        """Dense coefficient vector of g_i over basis(d), i in 0..3."""
        coeffs = self.coefficients[i]
        return [coeffs.get(p, Fraction(0)) for p in self.embedding.basis(self.d)]

    def joint_support(self):
        return frozenset().union(*(c.keys() for c in self.coefficients))

    def to_polynomials(self) -> Tuple[BivariatePolynomial, ...]:
        """Re-expand each g_i and undo the translation, giving back f_i."""
        dx, dy = self.translation
        return tuple(
            BivariatePolynomial({(x - dx, y - dy): c for (x, y), c in coeffs.items()})
            for coeffs in self.coefficients
        )

    def evaluate(self, s: Any, t: Any) -> Tuple[Fraction, ...]:
        """(g1(s,t), .., g4(s,t)) on the torus."""
        s, t = Fraction(s), Fraction(t)
        return tuple(sum((c * s ** x * t ** y for (x, y), c in coeffs.items()), Fraction(0))
                     for coeffs in self.coefficients)

    def torus_fixed_base_points(self) -> List[Point]:
        """Vertices of d*Q where every g_i vanishes; each is a base point of g at a torus-fixed point."""
        support = self.joint_support()
        return [v for v in dilate(self.embedding.Q, self.d).vertices if v not in support]


def build_embedding(f: Parametrization, Q: LatticePolygon, d: int,
                    label: Optional[str] = None, embedding: Optional[ToricEmbedding] = None) -> GradedMap:
    """Re-index each f_i, translated to the nonnegative quadrant, over the lattice points of d*Q."""
    points = f.joint_support()
    shift = (-min(x for x, _ in points), -min(y for _, y in points))
    embedding = embedding or ToricEmbedding(Q, d, label)
    index = embedding.index(d)

    coefficients = []
    for p in f.polynomials:
        translated = {}
        for (x, y), c in sorted(p.terms.items()):
            q = (x + shift[0], y + shift[1])
            if q not in index:
                raise ContainmentError(q, f"support point {q} (s^{x}*t^{y} before translation) "
                                          f"lies outside {d}*Q = {dilate(Q, d)}")
            translated[q] = c
        coefficients.append(translated)

    gmap = GradedMap(embedding=embedding, translation=shift, coefficients=tuple(coefficients))
    fixed = gmap.torus_fixed_base_points()
    if fixed:
        logger.warning("g has base points at the torus-fixed points of vertices %s of d*Q", fixed)
    logger.info("Embedding built", extra={"label": embedding.label, "Q": str(Q), "d": d,
                                          "basis_size": len(index)})
    return gmap
