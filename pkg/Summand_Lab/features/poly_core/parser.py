"""
Polynomial text parser
Grammar: expr := term (('+'|'-') term)*; term := unary ('*' unary)*;
unary := ('+'|'-') unary | power; power := atom ('^' INT)?;
atom := NUMBER | NAME | '(' expr ')'. Juxtaposition is a syntax error.
"""
import logging
import re
from typing import List, NamedTuple, Optional, Sequence

from sympy.polys.domains import QQ

from ...utils.errors import ParseError, UnknownVariable
from .rings import PolyRing, Polynomial

logger = logging.getLogger(__name__)

TOKEN_PATTERN = re.compile(
    r"""
    (?P<space>\s+)
    |(?P<number>\d+(?:\s*/\s*\d+)?)
    |(?P<name>[A-Za-z_][A-Za-z0-9_]*)
    |(?P<op>[-+*^()])
    |(?P<bad>.)
    """,
    re.VERBOSE | re.DOTALL,
)


class Token(NamedTuple):
    kind: str
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    for match in TOKEN_PATTERN.finditer(text):
        kind = match.lastgroup
        if kind == "space":
            continue
        if kind == "bad":
            raise ParseError(f"Unexpected character {match.group()!r}", match.start(), text)
        tokens.append(Token(kind, match.group(), match.start()))
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: PolyRing):
        self.text = text
        self.ring = ring
        self.tokens = tokenize(text)
        self.pos = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def accept(self, op: str) -> bool:
        if self.current.kind == "op" and self.current.text == op:
            self.pos += 1
            return True
        return False

    def fail(self, message: str, token: Optional[Token] = None):
        token = token or self.current
        raise ParseError(message, token.position, self.text)

    def parse(self) -> Polynomial:
        if self.current.kind == "end":
            self.fail("Empty polynomial")
        result = self.expr()
        if self.current.kind != "end":
            if self.current.kind in ("name", "number") or self.current.text == "(":
                self.fail(f"Missing operator before {self.current.text!r} (juxtaposition is not multiplication)")
            self.fail(f"Unexpected token {self.current.text!r}")
        return result

    def expr(self) -> Polynomial:
        result = self.term()
        while True:
            if self.accept("+"):
                result = result + self.term()
            elif self.accept("-"):
                result = result - self.term()
            else:
                return result

    def term(self) -> Polynomial:
        result = self.unary()
        while self.accept("*"):
            result = result * self.unary()
        return result

    def unary(self) -> Polynomial:
        if self.accept("-"):
            return -self.unary()
        if self.accept("+"):
            return self.unary()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.accept("^"):
            token = self.current
            if token.kind != "number" or "/" in token.text:
                self.fail("Exponent must be a nonnegative integer literal")
            self.advance()
            return base ** int(token.text)
        return base

    def atom(self) -> Polynomial:
        token = self.current
        if token.kind == "number":
            self.advance()
            if "/" in token.text:
                numer, denom = (int(part) for part in token.text.split("/"))
                if denom == 0:
                    self.fail("Division by zero in rational literal", token)
                return self.ring.constant(QQ(numer, denom))
            return self.ring.constant(int(token.text))
        if token.kind == "name":
            self.advance()
            if token.text not in self.ring.variables:
                raise UnknownVariable(
                    f"Unknown variable {token.text!r} at position {token.position}",
                    witness={"name": token.text, "position": token.position},
                )
            return self.ring.gen(token.text)
        if self.accept("("):
            inner = self.expr()
            if not self.accept(")"):
                self.fail("Expected ')'")
            return inner
        if token.kind == "end":
            self.fail("Unexpected end of input")
        self.fail(f"Unexpected token {token.text!r}")


def parse_polynomial(text: str, ring: PolyRing) -> Polynomial:
    """Parse ``text`` into a canonical polynomial of ``ring``."""
    return _Parser(text, ring).parse()


def parse_polynomials(texts: Sequence[str], ring: PolyRing) -> List[Polynomial]:
    """Parse a list of texts, or one comma/semicolon separated string."""
    if isinstance(texts, str):
        texts = [part for part in re.split(r"[;,]", texts) if part.strip()]
    return [parse_polynomial(text, ring) for text in texts]
