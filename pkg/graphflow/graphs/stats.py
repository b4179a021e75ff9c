from typing import NamedTuple, Tuple

import networkx as nx

from graphflow.core.numbers import format_qq
from graphflow.graphs.graph import UnorientedGraph
from graphflow.graphs.graph_sum import GraphSum


class GraphStats(NamedTuple):
    graph: UnorientedGraph
    coefficient: object
    diameter: int
    valencies: Tuple[int, ...]
    connected: bool
    components: int
    bottlenecks: int
    bridges: int

    def format(self):
        return '{}\t{}\tdiameter={}\tvalencies={}\tconnected={}\tcomponents={}\tbottlenecks={}\tbridges={}'.format(
            format_qq(self.coefficient), self.graph.encode(), self.diameter,
            ','.join(str(v) for v in self.valencies), str(self.connected).lower(),
            self.components, self.bottlenecks, self.bridges)


def to_networkx(g: UnorientedGraph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    return G


def graph_row(g: UnorientedGraph, coefficient=1) -> GraphStats:
    G = to_networkx(g)
    components = [G.subgraph(c) for c in nx.connected_components(G)]
    # Disconnected graphs report their widest component.
    diameter = max(nx.diameter(c) for c in components)
    return GraphStats(
        graph=g,
        coefficient=coefficient,
        diameter=diameter,
        valencies=tuple(sorted(d for _, d in G.degree())),
        connected=len(components) == 1,
        components=len(components),
        bottlenecks=sum(1 for _ in nx.articulation_points(G)),
        bridges=sum(1 for _ in nx.bridges(G)),
    )


def graph_stats(s: GraphSum) -> list:
    return [graph_row(g, c) for g, c in s.items()]


def valency_distribution(s: GraphSum) -> dict:
    counts = {}
    for row in graph_stats(s):
        for v in row.valencies:
            counts[v] = counts.get(v, 0) + 1
    return dict(sorted(counts.items()))


def diameter_distribution(s: GraphSum) -> dict:
    counts = {}
    for row in graph_stats(s):
        counts[row.diameter] = counts.get(row.diameter, 0) + 1
    return dict(sorted(counts.items()))
