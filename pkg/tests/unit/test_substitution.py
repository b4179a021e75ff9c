from unittest import TestCase

from graphflow.exceptions import DimensionMismatchError
from graphflow.complex.library import GAMMA3
from graphflow.lab.models import get_model
from graphflow.orient.evaluation import orient_flow
from graphflow.supergeom.diffpoly import DiffPoly
from graphflow.supergeom.schouten import schouten
from graphflow.supergeom.substitution import substitute, instantiate, bivector_bindings
from graphflow.supergeom.superpoly import SuperPoly, abstract_bivector

x1, x2, x3 = (DiffPoly.coordinate(i) for i in (1, 2, 3))


class TestSubstitution(TestCase):
    def test_bindings(self):
        P = get_model('so3').P
        bindings = bivector_bindings(P)
        self.assertEqual(bindings['P12'], x3)
        self.assertEqual(bindings['P13'], -x2)
        self.assertEqual(bindings['P23'], x1)

    def test_substitute_constant_binding(self):
        self.assertEqual(substitute(DiffPoly.symbol('f') * x1, {'f': 3}), x1.scale(3))

    def test_jacobiator_is_functorial(self):
        P = get_model('broken').P
        A = abstract_bivector(3)
        self.assertEqual(instantiate(schouten(A, A), P), schouten(P, P))

    def test_tetrahedral_flow_is_functorial(self):
        A = abstract_bivector(2)
        P = SuperPoly(2, {(1, 2): x1 * x1 * x2 + x2 ** 3})
        self.assertEqual(instantiate(orient_flow(GAMMA3.sum, A), P), orient_flow(GAMMA3.sum, P))

    def test_dimension_mismatch(self):
        with self.assertRaises(DimensionMismatchError):
            instantiate(abstract_bivector(2), get_model('so3').P)
