from unittest import TestCase

from graphflow.graphs.graph import UnorientedGraph, complete_graph
from graphflow.graphs.graph_sum import GraphSum
from graphflow.graphs.stats import graph_row, graph_stats, valency_distribution


class TestGraphStats(TestCase):
    def test_tetrahedron(self):
        row = graph_row(complete_graph(4))
        self.assertEqual(row.diameter, 1)
        self.assertEqual(row.valencies, (3, 3, 3, 3))
        self.assertTrue(row.connected)
        self.assertEqual(row.bottlenecks, 0)
        self.assertEqual(row.bridges, 0)

    def test_path(self):
        row = graph_row(UnorientedGraph(4, [(0, 1), (1, 2), (2, 3)]))
        self.assertEqual(row.diameter, 3)
        self.assertEqual(row.bottlenecks, 2)
        self.assertEqual(row.bridges, 3)

    def test_disconnected_reports_largest_component(self):
        row = graph_row(UnorientedGraph(5, [(0, 1), (1, 2), (3, 4)]))
        self.assertFalse(row.connected)
        self.assertEqual(row.components, 2)
        self.assertEqual(row.diameter, 2)

    def test_sum_rows_and_distribution(self):
        s = GraphSum.of(complete_graph(4), 2)
        rows = graph_stats(s)
        self.assertEqual(len(rows), 1)
        self.assertTrue(rows[0].format().startswith('2\t4 6 '))
        self.assertEqual(valency_distribution(s), {3: 4})
