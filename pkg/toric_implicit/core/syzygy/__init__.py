from toric_implicit.core.syzygy.curve import curve_matrix
from toric_implicit.core.syzygy.representation import (
    RepresentationMatrix,
    grading_comparison,
    substitution_residual,
    syzygy_matrix,
    verify_syzygies,
)
from toric_implicit.core.syzygy.system import SyzygySystem, assemble_system, default_nu, syzygy_system

__all__ = [
    "curve_matrix",
    "RepresentationMatrix",
    "grading_comparison",
    "substitution_residual",
    "syzygy_matrix",
    "verify_syzygies",
    "SyzygySystem",
    "assemble_system",
    "default_nu",
    "syzygy_system",
]
