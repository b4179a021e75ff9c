"""
Recursive descent parser for coefficient expressions.

    expr   := term (("+" | "-") term)*
    term   := factor (("*" | "/") factor)*
    factor := "-" factor | power
    power  := base ("^" integer)?
    base   := integer | coord | symbol | derivative | "(" expr ")"
    coord  := "x" positive-integer
    derivative := "d[" symbol "]/" ("dx" positive-integer)+

Rationals are written as quotients of integers ("3/2*x1"). The unicode minus
sign is accepted for "-". Printing a DiffPoly yields text in this grammar.
"""

import re
from typing import NamedTuple, Tuple

from graphflow.core.numbers import to_qq
from graphflow.exceptions import ExpressionSyntaxError, UnknownSymbolError, NonPolynomialError, \
    DimensionMismatchError, FormatError
from graphflow.supergeom.diffpoly import DiffPoly
from graphflow.supergeom.superpoly import SuperPoly


class Number(NamedTuple):
    value: int
    pos: int


class Coord(NamedTuple):
    index: int
    pos: int


class Symbol(NamedTuple):
    name: str
    pos: int


class Derivative(NamedTuple):
    name: str
    alpha: Tuple[int, ...]
    pos: int


class Neg(NamedTuple):
    operand: object
    pos: int


class BinOp(NamedTuple):
    op: str
    left: object
    right: object
    pos: int


class Power(NamedTuple):
    base: object
    exponent: int
    pos: int


Expression = (Number, Coord, Symbol, Derivative, Neg, BinOp, Power)

_TOKEN = re.compile(r'''
    (?P<ws>\s+)
  | (?P<deriv>d\[(?P<dname>[A-Za-z_][A-Za-z0-9_]*)\]/(?P<dvars>(?:dx[0-9]+)+))
  | (?P<coord>x(?P<cindex>[0-9]+)(?![A-Za-z0-9_]))
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<num>[0-9]+)
  | (?P<op>[-+*/^()])
''', re.VERBOSE)


def tokenize(text: str):
    text = text.replace('−', '-')
    tokens, pos = [], 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if not match:
            raise ExpressionSyntaxError('unexpected character {!r}'.format(text[pos]), pos)
        if match.group('ws'):
            pass
        elif match.group('deriv'):
            alpha = tuple(int(i) for i in re.findall(r'dx([0-9]+)', match.group('dvars')))
            tokens.append(('deriv', (match.group('dname'), alpha), pos))
        elif match.group('coord'):
            tokens.append(('coord', int(match.group('cindex')), pos))
        elif match.group('ident'):
            tokens.append(('ident', match.group('ident'), pos))
        elif match.group('num'):
            tokens.append(('num', int(match.group('num')), pos))
        else:
            tokens.append(('op', match.group('op'), pos))
        pos = match.end()
    tokens.append(('end', None, len(text)))
    return tokens


class Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def current(self):
        return self.tokens[self.i]

    def _advance(self):
        token = self.tokens[self.i]
        self.i += 1
        return token

    def _is_op(self, *ops):
        kind, value, _ = self.current
        return kind == 'op' and value in ops

    def parse(self):
        node = self.expr()
        kind, value, pos = self.current
        if kind != 'end':
            raise ExpressionSyntaxError('unexpected {!r}'.format(value), pos)
        return node

    def expr(self):
        node = self.term()
        while self._is_op('+', '-'):
            _, op, pos = self._advance()
            node = BinOp(op, node, self.term(), pos)
        return node

    def term(self):
        node = self.factor()
        while self._is_op('*', '/'):
            _, op, pos = self._advance()
            node = BinOp(op, node, self.factor(), pos)
        return node

    def factor(self):
        if self._is_op('-'):
            _, _, pos = self._advance()
            return Neg(self.factor(), pos)
        return self.power()

    def power(self):
        base = self.base()
        if not self._is_op('^'):
            return base
        _, _, pos = self._advance()
        kind, value, epos = self.current
        if kind == 'num':
            self._advance()
            return Power(base, value, pos)
        if self._is_op('-'):
            raise ExpressionSyntaxError('negative exponent', epos)
        if self._is_op('('):
            inner = self.base()
            if isinstance(inner, Number):
                return Power(base, inner.value, pos)
            raise ExpressionSyntaxError('non-integer exponent', epos)
        raise ExpressionSyntaxError('exponent must be a non-negative integer', epos)

    def base(self):
        kind, value, pos = self._advance()
        if kind == 'num':
            return Number(value, pos)
        if kind == 'coord':
            if value < 1:
                raise ExpressionSyntaxError('coordinates are numbered from x1', pos)
            return Coord(value, pos)
        if kind == 'ident':
            return Symbol(value, pos)
        if kind == 'deriv':
            name, alpha = value
            return Derivative(name, alpha, pos)
        if kind == 'op' and value == '(':
            node = self.expr()
            if not self._is_op(')'):
                raise ExpressionSyntaxError('missing ")"', self.current[2])
            self._advance()
            return node
        if kind == 'end':
            raise ExpressionSyntaxError('unexpected end of expression', pos)
        raise ExpressionSyntaxError('unexpected {!r}'.format(value), pos)


def parse_expression(text: str):
    return Parser(text).parse()


def format_expression(node) -> str:
    if isinstance(node, Number):
        return str(node.value)
    if isinstance(node, Coord):
        return 'x{}'.format(node.index)
    if isinstance(node, Symbol):
        return node.name
    if isinstance(node, Derivative):
        return 'd[{}]/{}'.format(node.name, ''.join('dx{}'.format(i) for i in node.alpha))
    if isinstance(node, Neg):
        return '-({})'.format(format_expression(node.operand))
    if isinstance(node, Power):
        return '({})^{}'.format(format_expression(node.base), node.exponent)
    return '({} {} {})'.format(format_expression(node.left), node.op, format_expression(node.right))


def to_diffpoly(node, r: int, parameters=(), functions=()) -> DiffPoly:
    """Evaluates an expression tree to a DiffPoly. Identifiers must be declared
    as parameters or function symbols."""
    parameters, functions = set(parameters), set(functions)

    def walk(node):
        if isinstance(node, Number):
            return DiffPoly.constant(node.value)
        if isinstance(node, Coord):
            if node.index > r:
                raise DimensionMismatchError('x{} at position {} is outside dimension {}'.format(node.index, node.pos, r))
            return DiffPoly.coordinate(node.index)
        if isinstance(node, Symbol):
            if node.name in parameters:
                return DiffPoly.parameter(node.name)
            if node.name in functions:
                return DiffPoly.symbol(node.name)
            raise UnknownSymbolError('unknown symbol {!r}'.format(node.name), node.pos)
        if isinstance(node, Derivative):
            if node.name not in functions:
                raise UnknownSymbolError('unknown function symbol {!r}'.format(node.name), node.pos)
            if any(not 1 <= i <= r for i in node.alpha):
                raise DimensionMismatchError('derivative index outside dimension {} at position {}'.format(r, node.pos))
            return DiffPoly.symbol(node.name, node.alpha)
        if isinstance(node, Neg):
            return -walk(node.operand)
        if isinstance(node, Power):
            return walk(node.base) ** node.exponent
        left, right = walk(node.left), walk(node.right)
        if node.op == '+':
            return left + right
        if node.op == '-':
            return left - right
        if node.op == '*':
            return left * right
        divisor = right.constant_value()
        if divisor is None:
            raise NonPolynomialError('division by a non-constant expression', node.pos)
        if not divisor:
            raise ExpressionSyntaxError('division by zero', node.pos)
        return left.scale(to_qq(1) / divisor)

    return walk(node)


def parse_diffpoly(text: str, r: int, parameters=(), functions=()) -> DiffPoly:
    return to_diffpoly(parse_expression(text), r, parameters, functions)


_LABEL = re.compile(r'^xi([0-9]+)$')


def parse_superpoly(text: str, r: int, parameters=(), functions=()) -> SuperPoly:
    """Rows "xi1 xi2: <expr>" or "1: <expr>", separated by newlines or ";".
    A lone "0" is the zero element."""
    rows = [row.strip() for chunk in text.splitlines() for row in chunk.split(';')]
    rows = [row for row in rows if row and not row.startswith('#')]
    if rows == ['0']:
        return SuperPoly.zero(r)

    terms = []
    for row in rows:
        label, sep, body = row.partition(':')
        if not sep:
            raise FormatError('Row {!r} needs a "<xi labels>: <expr>" layout'.format(row))
        label = label.strip()
        xi = ()
        if label != '1':
            indices = []
            for tok in label.split():
                match = _LABEL.match(tok)
                if not match:
                    raise FormatError('Bad odd generator {!r} in row {!r}'.format(tok, row))
                indices.append(int(match.group(1)))
            xi = tuple(indices)
        terms.append((xi, parse_diffpoly(body, r, parameters, functions)))

    out = SuperPoly.zero(r)
    for xi, coefficient in terms:
        out = out + SuperPoly(r, {xi: coefficient})
    return out


def used_symbols(node) -> set:
    """Names of symbols and differentiated functions occurring in an expression."""
    if isinstance(node, Symbol):
        return {node.name}
    if isinstance(node, Derivative):
        return {node.name}
    if isinstance(node, (Neg, Power)):
        return used_symbols(node[0])
    if isinstance(node, BinOp):
        return used_symbols(node.left) | used_symbols(node.right)
    return set()
