import os
from unittest import TestCase, skipUnless

from graphflow.complex.library import GAMMA3
from graphflow.exceptions import DegreeError
from graphflow.lab.models import get_model
from graphflow.orient.evaluation import symmetry_defect
from graphflow.orient.factorization import leibniz_ansatz_iterate
from graphflow.orient.leibniz import LeibnizGraph, evaluate_combination, evaluate_directed
from graphflow.supergeom.diffpoly import DiffPoly
from graphflow.supergeom.superpoly import SuperPoly, abstract_bivector

SLOW = os.getenv('GRAPHFLOW_SLOW_TESTS')

L0 = LeibnizGraph([('J', (1, 2, 3)), ('P', (0, 4))], 3)


class TestLeibnizAnsatz(TestCase):
    def setUp(self):
        self.P = get_model('abstract3').P

    def test_recovers_a_single_leibniz_graph(self):
        target = evaluate_directed(L0, self.P).scale(3)
        result = leibniz_ansatz_iterate(target, self.P)
        self.assertTrue(result.solved)
        self.assertEqual(len(result.diamond), 1)
        self.assertEqual(evaluate_combination(result.diamond, self.P), target)
        self.assertEqual(result.rounds[0].round, 1)
        self.assertIn('solved: true', result.report())

    def test_zero_target(self):
        result = leibniz_ansatz_iterate(SuperPoly.zero(3), self.P)
        self.assertTrue(result.solved)
        self.assertEqual(result.diamond, {})
        self.assertEqual(result.rounds, [])

    def test_target_outside_the_ansatz(self):
        product = DiffPoly.symbol('P12') * DiffPoly.symbol('P13') * DiffPoly.symbol('P23') * DiffPoly.coordinate(1)
        result = leibniz_ansatz_iterate(SuperPoly(3, {(1, 2, 3): product}), self.P, max_rounds=2)
        self.assertFalse(result.solved)
        self.assertIn('solved: false', result.report())

    def test_too_few_bivectors(self):
        with self.assertRaises(DegreeError):
            leibniz_ansatz_iterate(self.P, self.P)

    @skipUnless(SLOW, 'set GRAPHFLOW_SLOW_TESTS to run')
    def test_tetrahedral_flow_factorizes(self):
        P = abstract_bivector(3)
        target = symmetry_defect(GAMMA3.sum, P)
        result = leibniz_ansatz_iterate(target, P, hint=GAMMA3.sum)
        self.assertTrue(result.solved)
        self.assertEqual(evaluate_combination(result.diamond, P), target)
