"""Text grammar for bivariate Laurent polynomials.

    expr     := ['+'|'-'] term (('+'|'-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' ['-'] uint)?
    base     := rational | 's' | 't' | '(' expr ')'
    rational := uint ('/' uint)?

A negative exponent is accepted only when its base is a single term.
"""
import re
from fractions import Fraction
from typing import Iterator, List, NamedTuple

from toric_implicit.core.errors import PolynomialSyntaxError
from toric_implicit.core.poly.polynomial import BivariatePolynomial

_TOKENS = {
    "num": r"\d+",
    "var": r"[st]",
    "lpar": r"\(",
    "rpar": r"\)",
    "pow": r"\^",
    "mul": r"\*",
    "div": r"/",
    "plus": r"\+",
    "minus": r"-",
    "skip": r"\s+",
    "error": r".",
}
_REGEX = re.compile("|".join(f"(?P<{name}>{text})" for name, text in _TOKENS.items()))


class Token(NamedTuple):
    type: str
    value: str
    where: int


def tokenize(text: str) -> Iterator[Token]:
    for mo in _REGEX.finditer(text):
        kind = mo.lastgroup
        if kind == "skip":
            continue
        if kind == "error":
            raise PolynomialSyntaxError(f"unexpected character {mo.group()!r}", mo.start(), text)
        yield Token(kind, mo.group(), mo.start())
    yield Token("end", "", len(text))


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens: List[Token] = list(tokenize(text))
        self.index = 0

    @property
    def token(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        tok = self.token
        self.index += 1
        return tok

    def expect(self, kind: str, what: str) -> Token:
        if self.token.type != kind:
            self.fail(f"expected {what}")
        return self.advance()

    def fail(self, message: str, where: int = None):
        tok = self.token
        if where is None:
            where = tok.where
            found = "end of input" if tok.type == "end" else repr(tok.value)
            message = f"{message}, found {found}"
        raise PolynomialSyntaxError(message, where, self.text)

    def parse(self) -> BivariatePolynomial:
        if self.token.type == "end":
            self.fail("empty polynomial")
        result = self.expr()
        if self.token.type != "end":
            self.fail("expected an operator")
        return result

    def expr(self) -> BivariatePolynomial:
        negate = False
        if self.token.type in ("plus", "minus"):
            negate = self.advance().type == "minus"
        result = self.term()
        if negate:
            result = -result
        while self.token.type in ("plus", "minus"):
            op = self.advance()
            rhs = self.term()
            result = result + rhs if op.type == "plus" else result - rhs
        return result

    def term(self) -> BivariatePolynomial:
        result = self.factor()
        while self.token.type == "mul":
            self.advance()
            result = result * self.factor()
        return result

    def factor(self) -> BivariatePolynomial:
        base = self.base()
        if self.token.type != "pow":
            return base
        caret = self.advance()
        negative = False
        if self.token.type == "minus":
            self.advance()
            negative = True
        exponent = int(self.expect("num", "an exponent").value)
        if negative:
            if len(base) != 1:
                self.fail("a negative exponent needs a single-term base", caret.where)
            exponent = -exponent
        return base ** exponent

    def base(self) -> BivariatePolynomial:
        tok = self.token
        if tok.type == "num":
            self.advance()
            value = Fraction(int(tok.value))
            if self.token.type == "div":
                self.advance()
                denom = self.expect("num", "a denominator")
                if int(denom.value) == 0:
                    self.fail("zero denominator", denom.where)
                value /= int(denom.value)
            return BivariatePolynomial.constant(value)
        if tok.type == "var":
            self.advance()
            return BivariatePolynomial.variable(tok.value)
        if tok.type == "lpar":
            self.advance()
            inner = self.expr()
            self.expect("rpar", "')'")
            return inner
        self.fail("expected a number, a variable or '('")


def parse_polynomial(text: str) -> BivariatePolynomial:
    """Parse ``text`` into a polynomial with like terms combined.

    Raises PolynomialSyntaxError carrying the offending character position.
    """
    return _Parser(text).parse()
