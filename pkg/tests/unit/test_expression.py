from unittest import TestCase

from sympy import QQ

from graphflow.cli.expression import (parse_expression, parse_diffpoly, parse_superpoly, format_expression,
                                      used_symbols)
from graphflow.exceptions import (ExpressionSyntaxError, UnknownSymbolError, NonPolynomialError,
                                  DimensionMismatchError, FormatError)
from graphflow.lab.models import get_model
from graphflow.supergeom.diffpoly import DiffPoly
from graphflow.supergeom.superpoly import SuperPoly

x1, x2, x3 = (DiffPoly.coordinate(i) for i in (1, 2, 3))


class TestParsing(TestCase):
    def test_polynomial(self):
        self.assertEqual(parse_diffpoly('3/2*x1 - x2^2', 2), x1.scale(QQ(3, 2)) - x2 * x2)
        self.assertEqual(parse_diffpoly('(x1 + x2)^(2)', 2), (x1 + x2) ** 2)
        self.assertEqual(parse_diffpoly('−x1', 1), -x1)
        self.assertEqual(parse_diffpoly('-(x1 - 1)/2', 1), (1 - x1).scale(QQ(1, 2)))

    def test_symbols(self):
        self.assertEqual(parse_diffpoly('t*x1', 1, ('t',)), DiffPoly.parameter('t') * x1)
        self.assertEqual(parse_diffpoly('d[f]/dx2dx1', 2, (), ('f',)), DiffPoly.symbol('f', (1, 2)))
        self.assertEqual(parse_diffpoly('f^2', 1, (), ('f',)), DiffPoly.symbol('f') ** 2)

    def test_printed_polynomials_parse_back(self):
        p = x1.scale(QQ(-1, 2)) * x2 + DiffPoly.symbol('f', (1, 3)) * x3 - 4
        self.assertEqual(parse_diffpoly(str(p), 3, (), ('f',)), p)

    def test_format(self):
        self.assertEqual(format_expression(parse_expression('-x1^2 + 3')), '(-((x1)^2) + 3)')

    def test_used_symbols(self):
        self.assertEqual(used_symbols(parse_expression('t*x1 + d[f]/dx1 - (s)^2')), {'t', 'f', 's'})


class TestErrors(TestCase):
    def assertSyntax(self, text, fragment, position, error=ExpressionSyntaxError, **kwargs):
        with self.assertRaises(error) as context:
            parse_diffpoly(text, 3, **kwargs)
        self.assertIn(fragment, str(context.exception))
        self.assertEqual(context.exception.position, position)

    def test_exponents(self):
        self.assertSyntax('x1^-1', 'negative exponent', 3)
        self.assertSyntax('x1^(1/2)', 'non-integer exponent', 3)
        self.assertSyntax('x1^x2', 'exponent must be a non-negative integer', 3)

    def test_structure(self):
        self.assertSyntax('2 $', 'unexpected character', 2)
        self.assertSyntax('(x1', 'missing ")"', 3)
        self.assertSyntax('x1 +', 'unexpected end', 4)

    def test_division(self):
        self.assertSyntax('x1/x2', 'non-constant', 2, NonPolynomialError)
        self.assertSyntax('x1/(2 - 2)', 'division by zero', 2)

    def test_unknown_symbols(self):
        self.assertSyntax('y*x1', 'unknown symbol', 0, UnknownSymbolError)
        self.assertSyntax('d[g]/dx1', 'unknown function', 0, UnknownSymbolError)

    def test_dimension(self):
        with self.assertRaises(DimensionMismatchError):
            parse_diffpoly('x4', 3)
        with self.assertRaises(DimensionMismatchError):
            parse_diffpoly('d[f]/dx4', 3, (), ('f',))


class TestSuperPolyRows(TestCase):
    def test_rows(self):
        P = parse_superpoly('xi1 xi2: x3; xi2 xi3: x1\nxi3 xi1: x2', 3)
        self.assertEqual(P, get_model('so3').P)

    def test_zero_and_scalars(self):
        self.assertTrue(parse_superpoly('0', 2).is_zero())
        self.assertEqual(parse_superpoly('1: x1\n# comment\nxi2: 1', 2), SuperPoly(2, {(): x1, (2,): 1}))

    def test_bad_rows(self):
        with self.assertRaises(FormatError):
            parse_superpoly('xi1 x2', 2)
        with self.assertRaises(FormatError):
            parse_superpoly('xj1: 1', 2)
