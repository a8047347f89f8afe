"""Polynomial text grammar: terms joined by + / -, term = [int] ['*'] factor ('*' factor)*, factor = var ['^' int].

Text is validated token by token (so errors carry a column) and then handed to
sympy for expansion into exponent/coefficient pairs.
"""

import keyword
import re

from sympy import Poly, Symbol
from sympy.parsing.sympy_parser import parse_expr

from algebra.polynomial import Polynomial, PolynomialRing
from exceptions import ParseError

_TOKEN = re.compile(r"\s+|\d+|[A-Za-z_][A-Za-z0-9_]*|[+\-*^]|.")
IDENTIFIER = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


def valid_variable_name(name: str) -> bool:
    return bool(IDENTIFIER.match(name)) and not keyword.iskeyword(name)


def _tokens(text: str) -> list[tuple[str, int]]:
    out = []
    for match in _TOKEN.finditer(text):
        tok = match.group(0)
        if not tok.isspace():
            out.append((tok, match.start()))
    return out


def _to_sympy_source(text: str, ring: PolynomialRing, line: int, column: int) -> str:
    toks = _tokens(text)
    if not toks:
        raise ParseError("empty polynomial", line, column)
    names = set(ring.variables)
    pieces: list[str] = []
    pos = 0

    def fail(detail: str, at: int):
        where = toks[at][1] if at < len(toks) else len(text)
        raise ParseError(detail, line, column + where)

    def peek(k: int = 0):
        return toks[pos + k][0] if pos + k < len(toks) else None

    def factor():
        nonlocal pos
        tok = peek()
        if tok is None or not IDENTIFIER.match(tok):
            fail(f"expected a variable, got {tok!r}", pos)
        if tok not in names:
            fail(f"unknown variable {tok!r}", pos)
        pieces.append(tok)
        pos += 1
        if peek() == "^":
            pos += 1
            exp = peek()
            if exp is None or not exp.isdigit() or int(exp) < 1:
                fail("exponent must be a positive integer", pos)
            pieces.append(f"**{int(exp)}")
            pos += 1

    def term():
        nonlocal pos
        tok = peek()
        if tok is not None and tok.isdigit():
            pieces.append(str(int(tok)))
            pos += 1
            nxt = peek()
            if nxt == "*":
                pos += 1
                pieces.append("*")
                factor()
            elif nxt is not None and IDENTIFIER.match(nxt):
                pieces.append("*")
                factor()
            else:
                return
        else:
            factor()
        while peek() == "*":
            pos += 1
            pieces.append("*")
            factor()

    if peek() in ("+", "-"):
        pieces.append(peek())
        pos += 1
    term()
    while pos < len(toks):
        op = peek()
        if op not in ("+", "-"):
            fail(f"unexpected {op!r}", pos)
        pieces.append(f" {op} ")
        pos += 1
        term()
    return "".join(pieces)


def parse_polynomial(text: str, ring: PolynomialRing, line: int = 1, column: int = 1) -> Polynomial:
    """Parse `text` into a polynomial of `ring`; coefficients are reduced mod p."""
    source = _to_sympy_source(text, ring, line, column)
    symbols = [Symbol(name) for name in ring.variables]
    local = {name: sym for name, sym in zip(ring.variables, symbols)}
    expr = parse_expr(source, local_dict=local)
    poly = Poly(expr, *symbols)
    return ring.from_terms((int(c), tuple(int(a) for a in exps)) for exps, c in poly.terms())


def parse_polynomial_list(text: str, ring: PolynomialRing, line: int = 1, column: int = 1) -> list[Polynomial]:
    """Comma separated polynomials; empty entries are rejected."""
    out = []
    offset = 0
    for chunk in text.split(","):
        if not chunk.strip():
            raise ParseError("empty polynomial", line, column + offset)
        out.append(parse_polynomial(chunk, ring, line, column + offset))
        offset += len(chunk) + 1
    return out
