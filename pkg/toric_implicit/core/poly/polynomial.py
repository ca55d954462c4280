from fractions import Fraction
from types import MappingProxyType
from typing import Any, Dict, FrozenSet, Iterator, Mapping, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from toric_implicit.core.errors import DegenerateSupport, DivisionByZeroError
from toric_implicit.core.geometry.lattice import affine_dimension
from toric_implicit.utils.logger_config import get_logger

logger = get_logger("poly")

Exponent = Tuple[int, int]


class BivariatePolynomial:
    """Sparse Laurent polynomial in s, t with exact rational coefficients.

    Immutable; the term map never stores a zero coefficient.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Exponent, Any] = None):
        combined: Dict[Exponent, Fraction] = {}
        for (a, b), c in (terms or {}).items():
            key = (int(a), int(b))
            combined[key] = combined.get(key, Fraction(0)) + Fraction(c)
        self._terms = {k: v for k, v in combined.items() if v != 0}

    @classmethod
    def constant(cls, c: Any) -> "BivariatePolynomial":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, a: int, b: int, c: Any = 1) -> "BivariatePolynomial":
        return cls({(a, b): c})

    @classmethod
    def variable(cls, name: str) -> "BivariatePolynomial":
        if name == "s":
            return cls.monomial(1, 0)
        if name == "t":
            return cls.monomial(0, 1)
        raise ValueError(f"unknown variable {name!r}")

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_laurent(self) -> bool:
        return any(a < 0 or b < 0 for a, b in self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Tuple[Exponent, Fraction]]:
        return iter(sorted(self._terms.items(), reverse=True))

    # ring operations ----------------------------------------------------

    @staticmethod
    def _coerce(other) -> "BivariatePolynomial":
        if isinstance(other, BivariatePolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return BivariatePolynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        merged = dict(self._terms)
        for k, v in other._terms.items():
            merged[k] = merged.get(k, Fraction(0)) + v
        return BivariatePolynomial(merged)

    __radd__ = __add__

    def __neg__(self):
        return BivariatePolynomial({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        product: Dict[Exponent, Fraction] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                key = (a1 + a2, b1 + b2)
                product[key] = product.get(key, Fraction(0)) + c1 * c2
        return BivariatePolynomial(product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            ((a, b), c), = self._terms.items()
            return BivariatePolynomial({(-a * -exponent, -b * -exponent): Fraction(1) / c ** -exponent})
        result = BivariatePolynomial.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # text -----------------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for (a, b), c in self:
            factors = []
            for name, e in (("s", a), ("t", b)):
                if e == 1:
                    factors.append(name)
                elif e != 0:
                    factors.append(f"{name}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"BivariatePolynomial({self})"


def evaluate(p: BivariatePolynomial, s: Any, t: Any) -> Fraction:
    """Exact value of p at (s, t)."""
    s, t = Fraction(s), Fraction(t)
    total = Fraction(0)
    for (a, b), c in p.terms.items():
        if (a < 0 and s == 0) or (b < 0 and t == 0):
            raise DivisionByZeroError(f"term s^{a}*t^{b} is undefined at ({s}, {t})")
        total += c * s ** a * t ** b
    return total


def support(p: BivariatePolynomial) -> FrozenSet[Exponent]:
    return frozenset(p.terms)


class Parametrization(BaseModel):
    """f = (f1, f2, f3, f4), the affine parametrization of a surface in P^3."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    polynomials: Tuple[BivariatePolynomial, BivariatePolynomial, BivariatePolynomial, BivariatePolynomial] = Field(
        description="f1..f4 as sparse Laurent polynomials in s, t"
    )

    @model_validator(mode="after")
    def _check_support(self):
        if all(p.is_zero() for p in self.polynomials):
            raise DegenerateSupport("all four polynomials are zero")
        if affine_dimension(self.joint_support()) < 2:
            raise DegenerateSupport("the joint support of f1..f4 does not span a polygon")
        factor = self.common_monomial_factor()
        if factor != (0, 0):
            logger.warning("f1..f4 share the monomial factor s^%d*t^%d; the map is unchanged but "
                           "check that f has finitely many base points", *factor)
        return self

    @classmethod
    def from_strings(cls, texts: Sequence[str]) -> "Parametrization":
        from toric_implicit.core.poly.parser import parse_polynomial

        if len(texts) != 4:
            raise ValueError(f"a surface parametrization needs 4 polynomials, got {len(texts)}")
        return cls(polynomials=tuple(parse_polynomial(text) for text in texts))

    def joint_support(self) -> FrozenSet[Exponent]:
        return frozenset().union(*(support(p) for p in self.polynomials))

    def common_monomial_factor(self) -> Exponent:
        """Largest monomial s^a t^b (a, b >= 0) dividing every nonzero f_i."""
        points = self.joint_support()
        return (max(0, min(a for a, _ in points)), max(0, min(b for _, b in points)))

    def evaluate(self, s: Any, t: Any) -> Tuple[Fraction, ...]:
        return tuple(evaluate(p, s, t) for p in self.polynomials)
