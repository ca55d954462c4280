from typing import Dict, Sequence, Tuple

from toric_implicit.core.errors import DegenerateSupport
from toric_implicit.core.linalg.exact_linalg import RATIONAL, FieldSpec
from toric_implicit.core.poly.polynomial import BivariatePolynomial
from toric_implicit.core.syzygy.representation import RepresentationMatrix, representation_from_system
from toric_implicit.core.syzygy.system import assemble_system


def homogenize(c: BivariatePolynomial, dc: int) -> Dict[Tuple[int], object]:
    """Coefficients of c(s) read as a binary form of degree dc in (s, u), keyed by the power of s."""
    out = {}
    for (a, b), coeff in c.terms.items():
        if b != 0:
            raise ValueError(f"curve polynomials are univariate in s, found s^{a}*t^{b}")
        if not 0 <= a <= dc:
            raise ValueError(f"exponent {a} outside 0..{dc}")
        out[(a,)] = coeff
    return out


def curve_matrix(curve: Sequence[BivariatePolynomial], dc: int, nu: int,
                 field: FieldSpec = RATIONAL) -> RepresentationMatrix:
    """Moving-line matrix of the plane curve (c1 : c2 : c3) over the basis s^i u^(nu-i).

    Square of size dc at nu = dc - 1 when gcd(c1, c2, c3) = 1.
    """
    if len(curve) != 3:
        raise ValueError(f"a plane curve needs 3 polynomials, got {len(curve)}")
    if all(c.is_zero() for c in curve):
        raise DegenerateSupport("all three curve polynomials are zero")
    if nu < 0:
        raise ValueError(f"nu must be >= 0, got {nu}")
    generators = [homogenize(c, dc) for c in curve]
    source = [(i,) for i in range(nu + 1)]
    target = [(i,) for i in range(nu + dc + 1)]
    system = assemble_system(generators, source, target, field, nu)
    return representation_from_system(system, dc)
