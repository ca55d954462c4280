from toric_implicit.core.poly.polynomial import BivariatePolynomial, Parametrization, evaluate, support
from toric_implicit.core.poly.parser import parse_polynomial

__all__ = ["BivariatePolynomial", "Parametrization", "evaluate", "support", "parse_polynomial"]
