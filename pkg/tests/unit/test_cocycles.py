import os
import tempfile
from unittest import TestCase, skipUnless

from sympy import QQ

from graphflow.complex.cohomology import cohomology_report, cocycle_basis, coboundary_basis
from graphflow.complex.insertion import is_cocycle
from graphflow.complex.library import get_cocycle, load_library, load_cocycle_file, GAMMA3
from graphflow.constants.conf import resolve_data_dir
from graphflow.exceptions import CocycleValidationError, InputException
from graphflow.graphs.graph import UnorientedGraph, complete_graph, stick
from graphflow.graphs.graph_sum import GraphSum, read_graph_sum

SLOW = os.getenv('GRAPHFLOW_SLOW_TESTS')

WHEEL5 = UnorientedGraph.decode('6 10 0 1 0 2 0 3 0 4 0 5 1 2 1 3 2 4 3 5 4 5')


class TestCocycleLibrary(TestCase):
    def test_builtin(self):
        record = get_cocycle('gamma3')
        self.assertEqual(record.sum, GraphSum.of(complete_graph(4)))
        self.assertEqual(record.bigrading, (4, 6))

    def test_shipped_manifest_validates(self):
        records = load_library()
        self.assertIn('gamma3', records)
        self.assertEqual(records['gamma3'].sum, GAMMA3.sum)

    def test_shipped_pentagon_wheel(self):
        record = load_library()['gamma5']
        self.assertEqual(record.bigrading, (6, 10))
        self.assertEqual(len(record.sum), 2)
        self.assertEqual(record.sum.coefficient(WHEEL5), 1)
        other = [g for g in record.sum.graphs() if g != WHEEL5]
        self.assertEqual(len(other), 1)
        self.assertEqual(record.sum.coefficient(other[0]), QQ(5, 2))
        self.assertEqual(sorted(other[0].degree(v) for v in range(6)), [3, 3, 3, 3, 4, 4])

    @skipUnless(SLOW, 'set GRAPHFLOW_SLOW_TESTS to run')
    def test_pentagon_wheel_file_is_a_cocycle(self):
        s = read_graph_sum(os.path.join(resolve_data_dir(), 'gamma5.gsum'))
        self.assertTrue(is_cocycle(s))
        wheel_only = GraphSum.of(WHEEL5)
        self.assertFalse(is_cocycle(wheel_only))
        self.assertFalse(is_cocycle(s + wheel_only))

    def test_unknown_name(self):
        with self.assertRaises(InputException):
            get_cocycle('gamma99')

    def test_file_that_is_not_a_cocycle(self):
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, 'dot.gsum')
            with open(path, 'w') as f:
                f.write('1\t1 0\n')
            with self.assertRaises(CocycleValidationError):
                load_cocycle_file(path)

    def test_cocycle_file(self):
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, 'stick.gsum')
            with open(path, 'w') as f:
                f.write('3\t2 1 0 1\n')
            record = get_cocycle(path)
        self.assertEqual(record.sum, GraphSum.of(stick(), 3))
        self.assertEqual(record.bigrading, (2, 1))

    def test_inhomogeneous_file(self):
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, 'mixed.gsum')
            with open(path, 'w') as f:
                f.write('1\t2 1 0 1\n1\t4 6 0 1 0 2 0 3 1 2 1 3 2 3\n')
            with self.assertRaises(CocycleValidationError):
                load_cocycle_file(path)


class TestCohomology(TestCase):
    def test_tetrahedron_cell(self):
        report = cohomology_report(4, 6)
        self.assertEqual(report.basis_size, 1)
        self.assertEqual(report.cocycle_dimension, 1)
        self.assertEqual(report.coboundary_dimension, 0)

    def test_stick_is_exact(self):
        report = cohomology_report(2, 1)
        self.assertEqual((report.basis_size, report.cocycle_dimension, report.coboundary_dimension), (1, 1, 1))

    def test_cocycle_basis(self):
        basis = cocycle_basis(4, 6)
        self.assertEqual(len(basis), 1)
        self.assertEqual(basis[0].graphs(), [complete_graph(4)])

    def test_coboundary_basis(self):
        self.assertEqual(coboundary_basis(2, 1), [GraphSum.of(stick(), -1)])
        self.assertEqual(coboundary_basis(4, 6), [])

    def test_empty_cell(self):
        self.assertEqual(cohomology_report(3, 3).basis_size, 0)
