"""
Metagraph of a factorization: the Leibniz graphs of one or more solutions are
the nodes, and two of them are adjacent when their expansions share a
Kontsevich orgraph. Adjacency is decided on the canonical orgraph combinations
produced by expand_leibniz_graphs, so no evaluation at P is needed.
"""

from typing import NamedTuple

import networkx as nx

from graphflow.logger.base import get_logger
from graphflow.orient.leibniz import expand_leibniz_graphs

log = get_logger('Metagraph')


class MetagraphReport(NamedTuple):
    nodes: int
    edges: int
    components: int
    diameters: list
    cycle_rank: int
    leaves: int
    graph: object

    @property
    def connected(self):
        return self.components == 1

    def format(self):
        return '\n'.join([
            'nodes: {}'.format(self.nodes),
            'edges: {}'.format(self.edges),
            'components: {}'.format(self.components),
            'connected: {}'.format('true' if self.connected else 'false'),
            'diameters: {}'.format(' '.join(str(d) for d in self.diameters)),
            'independent cycles: {}'.format(self.cycle_rank),
            'leaves: {}'.format(self.leaves),
        ])


def leibniz_metagraph(solutions) -> MetagraphReport:
    """solutions: iterable of diamonds (dicts LeibnizGraph -> coefficient)."""
    nodes = sorted({L for diamond in solutions for L, c in diamond.items() if c}, key=lambda L: L.sort_key())

    G = nx.Graph()
    owners = {}
    for index, L in enumerate(nodes):
        G.add_node(index, encoding=L.encode())
        for orgraph in expand_leibniz_graphs(L):
            owners.setdefault(orgraph, []).append(index)

    for shared in owners.values():
        for i in range(len(shared)):
            for j in range(i + 1, len(shared)):
                G.add_edge(shared[i], shared[j])

    components = sorted(nx.connected_components(G), key=lambda c: min(c))
    diameters = sorted((nx.diameter(G.subgraph(c)) for c in components), reverse=True)
    report = MetagraphReport(nodes=G.number_of_nodes(), edges=G.number_of_edges(), components=len(components),
                             diameters=diameters, cycle_rank=len(nx.cycle_basis(G)),
                             leaves=sum(1 for _, degree in G.degree() if degree == 1), graph=G)
    log.info('Metagraph with {} nodes, {} edges, {} components'.format(report.nodes, report.edges, report.components))
    return report
