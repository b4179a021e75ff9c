"""Seeded generators shared by the unit tests."""

import random
from itertools import combinations

from graphflow.graphs.graph import UnorientedGraph
from graphflow.graphs.graph_sum import GraphSum
from graphflow.supergeom.diffpoly import DiffPoly
from graphflow.supergeom.superpoly import SuperPoly


def random_graph(rng: random.Random, n: int, E: int = None) -> UnorientedGraph:
    pairs = list(combinations(range(n), 2))
    if E is None:
        E = rng.randint(0, len(pairs))
    edges = rng.sample(pairs, min(E, len(pairs)))
    return UnorientedGraph(n, [(v, u) if rng.random() < 0.5 else (u, v) for u, v in edges])


def random_graph_sum(rng: random.Random, max_vertices=5, terms=2) -> GraphSum:
    n = rng.randint(1, max_vertices)
    E = rng.randint(0, n * (n - 1) // 2)
    return GraphSum([(random_graph(rng, n, E), rng.choice([-2, -1, 1, 3])) for _ in range(terms)])


def shuffled(rng: random.Random, g: UnorientedGraph):
    """A relabeled copy with shuffled edge order, and the sign of the edge shuffle."""
    sigma = list(range(g.n))
    rng.shuffle(sigma)
    order = list(range(g.edge_count))
    rng.shuffle(order)
    inversions = sum(1 for i in range(len(order)) for j in range(i + 1, len(order)) if order[j] < order[i])
    edges = [(sigma[g.edges[i][0]], sigma[g.edges[i][1]]) for i in order]
    return UnorientedGraph(g.n, edges), (-1 if inversions % 2 else 1)


def random_poly(rng: random.Random, r: int, degree=2, terms=3) -> DiffPoly:
    out = DiffPoly()
    for _ in range(terms):
        mono = DiffPoly.constant(rng.randint(-3, 3))
        for _ in range(rng.randint(0, degree)):
            mono = mono * DiffPoly.coordinate(rng.randint(1, r))
        out = out + mono
    return out


def random_multivector(rng: random.Random, r: int, degree: int, terms=2) -> SuperPoly:
    out = SuperPoly.zero(r)
    for _ in range(terms):
        xi = tuple(sorted(rng.sample(range(1, r + 1), degree)))
        out = out + SuperPoly(r, {xi: random_poly(rng, r)})
    return out
