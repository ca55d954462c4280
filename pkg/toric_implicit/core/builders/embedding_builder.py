from typing import Optional

from toric_implicit.core.embed.newton import bidegree_rectangle, newton_data
from toric_implicit.core.embed.toric_embedding import GradedMap, build_embedding
from toric_implicit.core.geometry.lattice import LatticePolygon
from toric_implicit.core.poly.polynomial import Parametrization

EMBEDDING_CHOICES = ("nprime", "n", "rectangle", "custom")


class EmbeddingBuilder:
    def __init__(self):
        self._parametrization: Optional[Parametrization] = None
        self._choice = "nprime"
        self._polytope: Optional[LatticePolygon] = None
        self._d: Optional[int] = None

    def set_parametrization(self, f: Parametrization):
        self._parametrization = f
        return self

    def use(self, choice: str):
        if choice not in EMBEDDING_CHOICES:
            raise ValueError(f"embedding must be one of {EMBEDDING_CHOICES}, got {choice!r}")
        self._choice = choice
        return self

    def set_polytope(self, polytope: LatticePolygon, d: int):
        self._polytope = polytope
        self._d = d
        self._choice = "custom"
        return self

    def build(self) -> GradedMap:
        if self._parametrization is None:
            raise ValueError("Parametrization must be set before building.")
        f = self._parametrization
        if self._choice == "custom":
            if self._polytope is None or self._d is None:
                raise ValueError("A custom embedding needs both a polytope and d.")
            return build_embedding(f, self._polytope, self._d, label="custom")

        nd = newton_data(f)
        if self._choice == "nprime":
            return build_embedding(f, nd.Nprime, nd.d, label="Nprime")
        if self._choice == "n":
            return build_embedding(f, nd.N, 1, label="N")
        rectangle, g = bidegree_rectangle(nd)
        return build_embedding(f, rectangle, g, label="bidegree-rectangle")
