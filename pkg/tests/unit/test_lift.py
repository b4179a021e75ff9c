from unittest import TestCase

from graphflow.lab.flows import empty_flow
from graphflow.lab.lift import nambu_lift_conditions, jet_monomials
from graphflow.supergeom.diffpoly import DiffPoly


class TestNambuLift(TestCase):
    def test_scaling_lifts_to_the_density(self):
        report = nambu_lift_conditions('scaling')
        self.assertTrue(report.solvable)
        self.assertEqual(report.R, DiffPoly.symbol('rho'))
        self.assertTrue(report.A.is_zero())
        self.assertEqual(report.unknowns, 2)
        self.assertEqual(report.kernel_dimension, 1)
        self.assertIn('solvable: true', report.format())

    def test_empty_flow(self):
        report = nambu_lift_conditions(empty_flow())
        self.assertTrue(report.solvable)
        self.assertEqual(report.unknowns, 0)

    def test_jet_monomials(self):
        self.assertEqual(jet_monomials({'rho': 1, 'a': 0}, 0), [DiffPoly.symbol('rho')])
        self.assertEqual(len(jet_monomials({'a': 1}, 1)), 3)
        self.assertEqual(len(jet_monomials({'a': 2}, 1)), 3)
        self.assertEqual(len(jet_monomials({'a': 1}, 2)), 6)
        self.assertEqual(jet_monomials({'a': 1}, 2, max_order=1), [])
