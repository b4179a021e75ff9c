from unittest import TestCase

from sympy import QQ

from graphflow.exceptions import UnboundSymbolError
from graphflow.supergeom.diffpoly import DiffPoly, jet_var, parameter_var

x1, x2, x3 = (DiffPoly.coordinate(i) for i in (1, 2, 3))
f = DiffPoly.symbol('f')


class TestArithmetic(TestCase):
    def test_cancellation(self):
        self.assertTrue((x1 * x2 - x2 * x1).is_zero())
        self.assertEqual(x1 + 0, x1)
        self.assertEqual(x1 - x1, 0)

    def test_power(self):
        self.assertEqual((x1 + x2) ** 2, x1 * x1 + x1 * x2.scale(2) + x2 * x2)
        self.assertEqual(x3 ** 0, 1)

    def test_constant_value(self):
        self.assertEqual(DiffPoly.constant(QQ(3, 4)).constant_value(), QQ(3, 4))
        self.assertEqual(DiffPoly().constant_value(), 0)
        self.assertIsNone(x1.constant_value())

    def test_printing(self):
        self.assertEqual(str(x1.scale(2) - x2), '2*x1 - x2')
        self.assertEqual(str(DiffPoly()), '0')
        self.assertEqual(str(DiffPoly.symbol('f', (1, 2))), 'd[f]/dx1dx2')
        self.assertEqual(str(-(x1 * x1).scale(QQ(1, 2))), '-1/2*x1^2')


class TestCalculus(TestCase):
    def test_total_derivative_of_coordinates(self):
        p = x1 * x1 * x2
        self.assertEqual(p.total_derivative(1), (x1 * x2).scale(2))
        self.assertEqual(p.total_derivative(3), 0)

    def test_jets_commute(self):
        p = f * x2
        self.assertEqual(p.derivative((1, 2)), p.total_derivative(2).total_derivative(1))
        self.assertEqual(f.derivative((2, 1)), DiffPoly.symbol('f', (1, 2)))

    def test_parameters_are_constants(self):
        t = DiffPoly.parameter('t')
        self.assertEqual((t * x1).total_derivative(1), t)

    def test_partial(self):
        t = parameter_var('t')
        p = DiffPoly.parameter('t') ** 2 * x1
        self.assertEqual(p.partial(t), (DiffPoly.parameter('t') * x1).scale(2))

    def test_substitute_binds_jets(self):
        p = DiffPoly.symbol('f', (1,))
        self.assertEqual(p.substitute({'f': x1 * x1 * x2}), (x1 * x2).scale(2))

    def test_substitute_parameters(self):
        t = DiffPoly.parameter('t')
        self.assertEqual((t * x1 + x2).substitute(parameters={'t': DiffPoly.constant(0)}), x2)

    def test_complete_substitution(self):
        with self.assertRaises(UnboundSymbolError):
            (f * DiffPoly.symbol('g')).substitute({'f': x1}, complete=True)

    def test_split_parameters(self):
        t = DiffPoly.parameter('t')
        p = t * x1 + x1 + t * t * x2
        groups = p.split_parameters()
        self.assertEqual(groups[((('x', 1, ()), 1),)], t + 1)
        self.assertEqual(groups[((('x', 2, ()), 1),)], t * t)

    def test_degrees(self):
        p = f * DiffPoly.symbol('f', (1, 3)) * x2
        self.assertEqual(p.degree_in('f'), {2})
        self.assertEqual(p.degree_in('x'), {1})
        self.assertEqual(p.derivative_order(), {2})
        self.assertIn(jet_var('f', (3, 1)), p.variables())
