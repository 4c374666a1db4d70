"""Parse textual polynomial and rational-function expressions.

Grammar (whitespace ignored, offsets refer to the input string):

    expr   := ['-'] term (('+'|'-') term)*
    term   := factor (('*' factor) | factor)*      -- juxtaposition multiplies
    factor := base ('^' uint)?
    base   := uint | VAR | '(' expr ')'

Integer literals reduce into the field (mod p in characteristic p, exact
rationals over Q).  parse_ratfun additionally splits on a single top-level
'/'.  Printing a parsed polynomial with BiPoly.to_text()/UniPoly.to_text()
and reparsing yields the identical canonical object.
"""

from .algebra.polys import BiPoly, UniPoly, ratfun_normalize
from .errors import NegativeExponent, ParseError, UnknownSymbol

_INT = "int"
_VAR = "var"
_OP = "op"
_END = "end"


def _tokenize(text):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append((_INT, int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha():
            tokens.append((_VAR, ch, i))
            i += 1
            continue
        if ch in "+-*^()/":
            tokens.append((_OP, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append((_END, None, n))
    return tokens


class ExprAst:
    """Expression tree node: ('int', v) | ('var', name) | ('neg', e) |
    ('add'|'sub'|'mul', l, r) | ('pow', e, k)."""

    __slots__ = ("kind", "args")

    def __init__(self, kind, *args):
        self.kind = kind
        self.args = args

    def __repr__(self):
        return f"({self.kind} {' '.join(map(repr, self.args))})"


class _Parser:
    def __init__(self, tokens, variables):
        self.tokens = tokens
        self.pos = 0
        self.variables = variables

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expr(self):
        kind, val, off = self.peek()
        negate = False
        if kind == _OP and val == "-":
            self.advance()
            negate = True
        node = self.term()
        if negate:
            node = ExprAst("neg", node)
        while True:
            kind, val, off = self.peek()
            if kind == _OP and val in "+-":
                self.advance()
                rhs = self.term()
                node = ExprAst("add" if val == "+" else "sub", node, rhs)
            else:
                return node

    def term(self):
        node = self.factor()
        while True:
            kind, val, off = self.peek()
            if kind == _OP and val == "*":
                self.advance()
                node = ExprAst("mul", node, self.factor())
            elif kind in (_INT, _VAR) or (kind == _OP and val == "("):
                node = ExprAst("mul", node, self.factor())
            else:
                return node

    def factor(self):
        node = self.base()
        kind, val, off = self.peek()
        if kind == _OP and val == "^":
            self.advance()
            kind, val, off = self.peek()
            if kind == _OP and val == "-":
                raise NegativeExponent("exponents must be nonnegative", off)
            if kind != _INT:
                raise ParseError("expected an integer exponent after '^'", off)
            self.advance()
            node = ExprAst("pow", node, val)
        return node

    def base(self):
        kind, val, off = self.advance()
        if kind == _INT:
            return ExprAst("int", val)
        if kind == _VAR:
            if val not in self.variables:
                raise UnknownSymbol(f"unknown symbol {val!r}", off)
            return ExprAst("var", val)
        if kind == _OP and val == "(":
            node = self.expr()
            kind, val, off = self.advance()
            if kind != _OP or val != ")":
                raise ParseError("expected ')'", off)
            return node
        raise ParseError("expected a number, variable or '('", off)


def parse_expr_ast(text, variables=("X", "Y")):
    """Parse to an ExprAst without evaluating; raises ParseError family."""
    parser = _Parser(_tokenize(text), variables)
    node = parser.expr()
    kind, val, off = parser.peek()
    if kind != _END:
        raise ParseError(f"unexpected {val!r}", off)
    return node


def _eval_ast(node, field, varmap):
    kind = node.kind
    if kind == "int":
        return BiPoly.constant(field, field.from_int(node.args[0]))
    if kind == "var":
        i, j = varmap[node.args[0]]
        return BiPoly(field, {(i, j): field.one})
    if kind == "neg":
        return -_eval_ast(node.args[0], field, varmap)
    if kind == "add":
        return _eval_ast(node.args[0], field, varmap) + _eval_ast(node.args[1], field, varmap)
    if kind == "sub":
        return _eval_ast(node.args[0], field, varmap) - _eval_ast(node.args[1], field, varmap)
    if kind == "mul":
        return _eval_ast(node.args[0], field, varmap) * _eval_ast(node.args[1], field, varmap)
    if kind == "pow":
        return _eval_ast(node.args[0], field, varmap) ** node.args[1]
    raise AssertionError(f"unhandled node {kind}")


def parse_poly(text, field, variables=("X", "Y")):
    """Parse a polynomial in the given variables into a BiPoly.

    The first variable maps to the X axis and the second (if any) to Y.
    """
    node = parse_expr_ast(text, variables)
    varmap = {}
    for axis, name in enumerate(variables[:2]):
        varmap[name] = (1, 0) if axis == 0 else (0, 1)
    return _eval_ast(node, field, varmap)


def parse_unipoly(text, field, var="X"):
    """Parse a univariate polynomial (used for moduli and relation parts)."""
    poly = parse_poly(text, field, (var,)).as_unipoly_x()
    return UniPoly(field, poly.coeffs, var)


def parse_ratfun(text, field, variables=("X", "Y")):
    """Parse "num/den" (the '/' optional) into a canonical RationalFn."""
    depth = 0
    split = None
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0:
            if split is not None:
                raise ParseError("more than one top-level '/'", i)
            split = i
    if split is None:
        num, den = parse_poly(text, field, variables), BiPoly.one(field)
    else:
        num = parse_poly(text[:split], field, variables)
        try:
            den = parse_poly(text[split + 1:], field, variables)
        except ParseError as exc:
            exc.offset += split + 1  # point into the original string
            raise
    if num.deg_y <= 0 and den.deg_y <= 0:
        return ratfun_normalize(num.as_unipoly_x(), den.as_unipoly_x())
    return ratfun_normalize(num, den)
