"""
Insertion of graphs into vertices, the graded commutator of insertions, the
differential d = [stick, .] and disjoint unions.

Wedge order conventions:
    insert(g1, g2, v)  - edges of g2 (reattached endpoints) first, then g1's edges
    disjoint_union     - edges of the first summand first
"""

from itertools import product

from graphflow.core.workers import parallel_map
from graphflow.exceptions import VertexIndexError
from graphflow.graphs.graph import UnorientedGraph, stick
from graphflow.graphs.graph_sum import GraphSum
from graphflow.logger.base import get_logger

log = get_logger('Insertion')


def _raw_insertions(g1: UnorientedGraph, g2: UnorientedGraph, at_vertex: int):
    """Yields the edge lists (new labels, wedge ordered) of every redistribution."""
    n1, n2 = g1.n, g2.n
    if not 0 <= at_vertex < n2:
        raise VertexIndexError('Vertex {} out of range for a graph on {} vertices'.format(at_vertex, n2))

    def outer(w):
        return w if w < at_vertex else w - 1

    offset = n2 - 1
    inner_edges = [(offset + a, offset + b) for a, b in g1.edges]
    incident = [i for i, e in enumerate(g2.edges) if at_vertex in e]

    for targets in product(range(n1), repeat=len(incident)):
        choice = dict(zip(incident, targets))
        edges = []
        for i, (a, b) in enumerate(g2.edges):
            if i in choice:
                other = b if a == at_vertex else a
                edges.append((outer(other), offset + choice[i]))
            else:
                edges.append((outer(a), outer(b)))
        yield edges + inner_edges


def insert_terms(g1, g2, at_vertex):
    n = g1.n + g2.n - 1
    return [((n, edges), 1) for edges in _raw_insertions(g1, g2, at_vertex)]


def insert(g1: UnorientedGraph, g2: UnorientedGraph, at_vertex: int) -> GraphSum:
    return GraphSum(insert_terms(g1, g2, at_vertex), permissive=True)


def raw_insertion_count(g1: UnorientedGraph, g2: UnorientedGraph, at_vertex: int) -> int:
    return g1.n ** g2.degree(at_vertex)


def _compose_pair(pair):
    (g1, c1), (g2, c2) = pair
    c = c1 * c2
    terms = []
    for v in range(g2.n):
        terms += [(graph, c) for graph, _ in insert_terms(g1, g2, v)]
    return GraphSum(terms, permissive=True)


def compose(s1: GraphSum, s2: GraphSum) -> GraphSum:
    """Sum of all insertions of terms of s1 into vertices of terms of s2."""
    pairs = [(t1, t2) for t1 in s1.items() for t2 in s2.items()]
    out = GraphSum()
    for part in parallel_map(_compose_pair, pairs):
        out = out + part
    return out


def lie_bracket(s1: GraphSum, s2: GraphSum) -> GraphSum:
    """[s1, s2] = s1 o s2 - (-1)^(E1 E2) s2 o s1, extended bilinearly term by term."""
    out = GraphSum()
    for g1, c1 in s1.items():
        t1 = GraphSum._from_canonical({g1: c1})
        for g2, c2 in s2.items():
            t2 = GraphSum._from_canonical({g2: c2})
            sign = -1 if (g1.edge_count * g2.edge_count) % 2 else 1
            out = out + compose(t1, t2) - compose(t2, t1).scale(sign)
    return out


_STICK = GraphSum.of(stick())


def differential(s: GraphSum) -> GraphSum:
    out = lie_bracket(_STICK, s)
    log.spam('d: {} terms -> {} terms'.format(len(s), len(out)))
    return out


def is_cocycle(s: GraphSum) -> bool:
    return differential(s).is_empty()


def disjoint_union_graphs(g1: UnorientedGraph, g2: UnorientedGraph) -> UnorientedGraph:
    shift = g1.n
    return UnorientedGraph(g1.n + g2.n, list(g1.edges) + [(a + shift, b + shift) for a, b in g2.edges])


def disjoint_union(s1: GraphSum, s2: GraphSum) -> GraphSum:
    terms = []
    for g1, c1 in s1.items():
        for g2, c2 in s2.items():
            terms.append((disjoint_union_graphs(g1, g2), c1 * c2))
    return GraphSum(terms)


def cocycle_power(gamma: GraphSum, omega: GraphSum, m: int) -> GraphSum:
    """gamma disjoint-united with m copies of omega."""
    assert m >= 0, 'Power must be non-negative, got {}'.format(m)
    out = gamma
    for _ in range(m):
        out = disjoint_union(out, omega)
    return out
