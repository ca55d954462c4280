from toric_implicit.core.geometry.lattice import (
    LatticePolygon,
    affine_dimension,
    alpha,
    boundary_lattice_count,
    convex_hull,
    dilate,
    interior_lattice_points,
    lattice_points,
    normalized_area,
    translate,
)

__all__ = [
    "LatticePolygon",
    "affine_dimension",
    "alpha",
    "boundary_lattice_count",
    "convex_hull",
    "dilate",
    "interior_lattice_points",
    "lattice_points",
    "normalized_area",
    "translate",
]
