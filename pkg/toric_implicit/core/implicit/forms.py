import math
from fractions import Fraction
from functools import lru_cache, reduce
from itertools import product
from typing import Any, Dict, List, Mapping, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, model_validator
from sympy import Poly, symbols
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

Monomial = Tuple[int, ...]


@lru_cache(maxsize=64)
def monomials(degree: int, nvars: int = 4) -> Tuple[Monomial, ...]:
    """Exponent vectors of total degree ``degree``, graded-lex descending."""
    exps = (e for e in product(range(degree + 1), repeat=nvars) if sum(e) == degree)
    return tuple(sorted(exps, reverse=True))


def variable_names(nvars: int) -> Tuple[str, ...]:
    return tuple(f"T{i}" for i in range(1, nvars + 1))


def normalize_coefficients(terms: Mapping[Monomial, Any]) -> Dict[Monomial, int]:
    """Scale to primitive integers whose graded-lex leading coefficient is positive."""
    terms = {m: Fraction(c) for m, c in terms.items() if c}
    if not terms:
        return {}
    den = reduce(math.lcm, (c.denominator for c in terms.values()))
    ints = {m: int(c * den) for m, c in terms.items()}
    g = reduce(math.gcd, (abs(c) for c in ints.values()))
    lead = max(ints, key=lambda m: (sum(m), m))
    sign = 1 if ints[lead] > 0 else -1
    return {m: sign * c // g for m, c in ints.items()}


class ImplicitForm(BaseModel):
    """Homogeneous form in T1..Tn, normalized to primitive integers with positive leading coefficient."""

    model_config = ConfigDict(frozen=True)

    degree: int
    nvars: int = 4
    terms: Tuple[Tuple[Tuple[int, ...], int], ...]

    @model_validator(mode="after")
    def _check_terms(self):
        for m, _ in self.terms:
            if len(m) != self.nvars or sum(m) != self.degree:
                raise ValueError(f"monomial {m} is not of degree {self.degree} in {self.nvars} variables")
        return self

    @classmethod
    def from_terms(cls, terms: Mapping[Monomial, Any], nvars: int = 4) -> "ImplicitForm":
        normalized = normalize_coefficients(terms)
        if not normalized:
            raise ValueError("the zero polynomial has no normalized form")
        degrees = {sum(m) for m in normalized}
        if len(degrees) != 1:
            raise ValueError(f"form is not homogeneous (degrees {sorted(degrees)})")
        ordered = tuple(sorted(normalized.items(), reverse=True))
        return cls(degree=degrees.pop(), nvars=nvars, terms=ordered)

    @classmethod
    def from_vector(cls, degree: int, vector: Sequence[Any], nvars: int = 4) -> "ImplicitForm":
        basis = monomials(degree, nvars)
        if len(vector) != len(basis):
            raise ValueError(f"expected {len(basis)} coefficients, got {len(vector)}")
        return cls.from_terms(dict(zip(basis, vector)), nvars)

    @classmethod
    def from_poly_element(cls, element, nvars: int = 4) -> "ImplicitForm":
        """From a sympy sparse polynomial over ZZ or QQ."""
        return cls.from_terms({tuple(m): Fraction(int(c.numerator), int(c.denominator))
                               for m, c in element.items()}, nvars)

    @classmethod
    def parse(cls, text: str, nvars: int = 4) -> "ImplicitForm":
        """Read a form such as ``2*T1*T2 - T2*T3 + 3*T4^2``."""
        gens = symbols(variable_names(nvars))
        local = {str(g): g for g in gens}
        expr = parse_expr(text, local_dict=local, transformations=standard_transformations + (convert_xor,))
        poly = Poly(expr, *gens)
        return cls.from_terms({m: Fraction(int(c.p), int(c.q)) for m, c in poly.terms()}, nvars)

    @property
    def coefficients(self) -> Dict[Monomial, int]:
        return dict(self.terms)

    def vector(self) -> List[int]:
        coeffs = self.coefficients
        return [coeffs.get(m, 0) for m in monomials(self.degree, self.nvars)]

    def evaluate(self, point: Sequence[Any]) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms:
            value = Fraction(c)
            for x, e in zip(point, m):
                if e:
                    value *= Fraction(x) ** e
            total += value
        return total

    def __str__(self) -> str:
        names = variable_names(self.nvars)
        pieces = []
        for m, c in self.terms:
            factors = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, m) if e]
            mag = abs(c)
            body = "*".join(factors) if mag == 1 and factors else "*".join([str(mag)] + factors)
            pieces.append((c < 0, body))
        text = ("-" if pieces[0][0] else "") + pieces[0][1]
        for negative, body in pieces[1:]:
            text += f" {'-' if negative else '+'} {body}"
        return text
