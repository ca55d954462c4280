from toric_implicit.core.embed.newton import NewtonData, bidegree_rectangle, default_polytope_choices, newton_data
from toric_implicit.core.embed.toric_embedding import (
    GradedMap,
    ToricEmbedding,
    build_embedding,
    graded_basis,
    monomial_values,
)

__all__ = [
    "NewtonData",
    "bidegree_rectangle",
    "default_polytope_choices",
    "newton_data",
    "GradedMap",
    "ToricEmbedding",
    "build_embedding",
    "graded_basis",
    "monomial_values",
]
