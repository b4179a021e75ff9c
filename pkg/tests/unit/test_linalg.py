from unittest import TestCase

from sympy import QQ

from graphflow.core import linalg


class TestLinearAlgebra(TestCase):
    def test_consistent_system(self):
        columns = [{'a': 1, 'b': 1}, {'b': 1}]
        solution, consistent = linalg.solve(columns, {'a': 2, 'b': 5})
        self.assertTrue(consistent)
        self.assertEqual(solution, {0: QQ(2), 1: QQ(3)})

    def test_inconsistent_system_gives_least_squares(self):
        solution, consistent = linalg.solve([{'a': 1}], {'a': 1, 'b': 1})
        self.assertFalse(consistent)
        self.assertEqual(solution, {0: QQ(1)})

    def test_no_columns(self):
        self.assertEqual(linalg.solve([], {}), ({}, True))
        self.assertEqual(linalg.solve([], {'a': 1}), ({}, False))

    def test_nullspace_and_rank(self):
        columns = [{'r': 1}, {'r': 1}, {'s': 2}]
        kernel = linalg.nullspace(columns)
        self.assertEqual(len(kernel), 1)
        self.assertEqual(linalg.combine(columns, kernel[0]), {})
        self.assertEqual(linalg.rank(columns), 2)
        self.assertEqual(linalg.nullspace([{}, {}]), [{0: QQ(1)}, {1: QQ(1)}])

    def test_least_norm(self):
        columns = [{'r': 1}, {'r': 1}]
        solution, _ = linalg.solve(columns, {'r': 2})
        kernel = linalg.nullspace(columns)
        self.assertEqual(linalg.least_norm(solution, kernel, 2), {0: QQ(1), 1: QQ(1)})

    def test_row_keys_need_not_be_inserted_in_order(self):
        first = linalg.solve([{'b': 1, 'a': 1}], {'b': 3, 'a': 3})
        second = linalg.solve([{'a': 1, 'b': 1}], {'a': 3, 'b': 3})
        self.assertEqual(first, second)
