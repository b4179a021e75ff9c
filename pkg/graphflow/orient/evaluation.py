"""
Evaluation of unoriented graphs by odd edge operators.

Vertex v carries content_v on a private copy (x_v, xi_v). Every edge {u, v}
acts, first listed edge first, by

    Delta_uv = sum_i  d/dx_u^i d/dxi_{v,i}  +  d/dx_v^i d/dxi_{u,i}

after which all copies are identified with (x, xi). The odd derivative sign is
taken against the product content_0 content_1 ... in vertex order.
"""

from itertools import product

from graphflow.core.workers import parallel_map
from graphflow.exceptions import DimensionMismatchError, VertexIndexError
from graphflow.graphs.graph import UnorientedGraph
from graphflow.graphs.graph_sum import GraphSum
from graphflow.logger.base import get_logger
from graphflow.supergeom.diffpoly import DiffPoly
from graphflow.supergeom.schouten import schouten
from graphflow.supergeom.superpoly import SuperPoly, sort_xi, require_degree

log = get_logger('Evaluation')


def _insert_sorted(t, i):
    return tuple(sorted(t + (i,)))


def _apply_edge(states, u, v):
    out = {}
    for (xis, derivs), c in states.items():
        for target, source in ((v, u), (u, v)):
            # d/dxi_{target,i} then d/dx_source^i
            offset = sum(len(xis[w]) for w in range(target))
            for pos, i in enumerate(xis[target]):
                sign = -c if (offset + pos) % 2 else c
                new_xis = xis[:target] + (xis[target][:pos] + xis[target][pos + 1:],) + xis[target + 1:]
                new_derivs = derivs[:source] + (_insert_sorted(derivs[source], i),) + derivs[source + 1:]
                key = (new_xis, new_derivs)
                value = out.get(key, 0) + sign
                if value:
                    out[key] = value
                else:
                    out.pop(key, None)
    return out


class _Evaluation:
    def __init__(self, graph, contents):
        self.graph = graph
        self.terms = [c.items() for c in contents]
        self._derivatives = {}

    def derivative(self, v, t, alpha):
        key = (v, t, alpha)
        cached = self._derivatives.get(key)
        if cached is not None:
            return cached
        if not alpha:
            value = self.terms[v][t][1]
        else:
            value = self.derivative(v, t, alpha[:-1]).total_derivative(alpha[-1])
        self._derivatives[key] = value
        return value

    def branch(self, choice):
        n = self.graph.n
        states = {(tuple(self.terms[v][choice[v]][0] for v in range(n)), ((),) * n): 1}
        for u, v in self.graph.edges:
            states = _apply_edge(states, u, v)
            if not states:
                return {}

        out = {}
        for (xis, derivs), c in states.items():
            sign, key = sort_xi([i for part in xis for i in part])
            if not sign:
                continue
            value = DiffPoly.constant(c * sign)
            for v in range(n):
                value = value * self.derivative(v, choice[v], derivs[v])
                if not value:
                    break
            if value:
                out[key] = out[key] + value if key in out else value
        return out


def evaluate(graph: UnorientedGraph, contents: list) -> SuperPoly:
    if len(contents) != graph.n:
        raise VertexIndexError('Graph has {} vertices but {} contents were given'.format(graph.n, len(contents)))
    r = contents[0].r
    if any(c.r != r for c in contents):
        raise DimensionMismatchError('Vertex contents live in different dimensions')
    if any(c.is_zero() for c in contents):
        return SuperPoly.zero(r)

    job = _Evaluation(graph, contents)
    choices = list(product(*[range(len(t)) for t in job.terms]))
    total = {}
    for part in parallel_map(job.branch, choices):
        for key, value in part.items():
            total[key] = total[key] + value if key in total else value
    result = SuperPoly._raw(r, {k: v for k, v in total.items() if v})

    expected = {sum(len(job.terms[v][choice[v]][0]) for v in range(graph.n)) - graph.edge_count
                for choice in choices}
    assert result.degrees() <= expected, 'Degree bookkeeping violated: {} not in {}'.format(
        sorted(result.degrees()), sorted(expected))
    return result


def orient_flow(gamma: GraphSum, P: SuperPoly) -> SuperPoly:
    """Or(gamma)(P): every vertex carries P."""
    require_degree(P, 2, 'bivector')
    out = SuperPoly.zero(P.r)
    for g, c in gamma.items():
        out = out + evaluate(g, [P] * g.n).scale(c)
    return out


def evaluate_sum(gamma: GraphSum, contents: list) -> SuperPoly:
    out = SuperPoly.zero(contents[0].r)
    for g, c in gamma.items():
        out = out + evaluate(g, contents).scale(c)
    return out


def jacobiator_insertion(gamma: GraphSum, P: SuperPoly, i: int) -> SuperPoly:
    """Or(gamma)(P, ..., [[P, P]] at vertex i, ..., P)."""
    require_degree(P, 2, 'bivector')
    out = SuperPoly.zero(P.r)
    PP = schouten(P, P)
    for g, c in gamma.items():
        if not 0 <= i < g.n:
            raise VertexIndexError('Vertex {} out of range for {}'.format(i, g.encode()))
        contents = [P] * g.n
        contents[i] = PP
        out = out + evaluate(g, contents).scale(c)
    return out


def jacobiator_insertion_sum(gamma: GraphSum, P: SuperPoly) -> SuperPoly:
    n = max((g.n for g in gamma.graphs()), default=0)
    out = SuperPoly.zero(P.r)
    for i in range(n):
        out = out + jacobiator_insertion(gamma, P, i)
    return out


def symmetry_defect(gamma: GraphSum, P: SuperPoly) -> SuperPoly:
    """[[P, Or(gamma)(P)]], which vanishes for Poisson P when gamma is a cocycle."""
    return schouten(P, orient_flow(gamma, P))
