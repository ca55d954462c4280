from toric_implicit.core.linalg.exact_linalg import (
    RATIONAL,
    ExactMatrix,
    FieldSpec,
    Scalar,
    change_field,
    determinant,
    linear_combination,
    nullspace,
    prime_field,
    rank,
)

__all__ = [
    "RATIONAL",
    "ExactMatrix",
    "FieldSpec",
    "Scalar",
    "change_field",
    "determinant",
    "linear_combination",
    "nullspace",
    "prime_field",
    "rank",
]
