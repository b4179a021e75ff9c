"""
Flows dP/de = Q(P) on bivectors and their formal integration.

A GraphFlow is the orientation morphism of a cocycle; the ScalingFlow Q(P) = P
is accepted wherever a cocycle is. Both expose `multilinear(contents)`, the
polarized form used by the Picard iteration.
"""

from math import factorial

from sympy import QQ

from graphflow.complex.library import CocycleRecord, get_cocycle
from graphflow.constants.limits import DEFAULT_PICARD_ORDER, MAX_PICARD_ORDER
from graphflow.exceptions import ResourceGuardError, DegreeError
from graphflow.graphs.graph_sum import GraphSum
from graphflow.logger.base import get_logger
from graphflow.orient.evaluation import evaluate_sum, orient_flow
from graphflow.supergeom.diffpoly import DiffPoly, parameter_var
from graphflow.supergeom.superpoly import SuperPoly, require_degree

log = get_logger('Flows')

EPSILON = '_eps'


class GraphFlow:
    def __init__(self, record: CocycleRecord):
        self.record = record
        self.name = record.name
        if record.bigrading:
            self.arity, self.edges = record.bigrading
        else:
            self.arity, self.edges = 0, 0

    def __call__(self, P: SuperPoly) -> SuperPoly:
        require_degree(P, 2, 'bivector')
        return orient_flow(self.record.sum, P)

    def multilinear(self, contents: list) -> SuperPoly:
        return evaluate_sum(self.record.sum, contents)

    def __repr__(self):
        return 'GraphFlow({!r})'.format(self.name)


class ScalingFlow:
    name = 'scaling'
    arity = 1
    edges = 0

    def __call__(self, P: SuperPoly) -> SuperPoly:
        require_degree(P, 2, 'bivector')
        return P

    def multilinear(self, contents: list) -> SuperPoly:
        return contents[0]

    def __repr__(self):
        return 'ScalingFlow()'


def empty_flow(name='empty') -> GraphFlow:
    return GraphFlow(CocycleRecord(name, GraphSum(), None, 'zero graph sum'))


def get_flow(name_or_path, data_dir=None):
    if isinstance(name_or_path, (GraphFlow, ScalingFlow)):
        return name_or_path
    if isinstance(name_or_path, CocycleRecord):
        return GraphFlow(name_or_path)
    if name_or_path == ScalingFlow.name:
        return ScalingFlow()
    if name_or_path == 'empty':
        return empty_flow()
    return GraphFlow(get_cocycle(name_or_path, data_dir))


def apply_symmetry(model, flow) -> SuperPoly:
    """Q(P) of the model's bivector."""
    flow = get_flow(flow)
    Q = flow(model.P)
    log.info('Applied {} to {}: {} terms'.format(flow.name, model.name, len(Q.term_keys())))
    return Q


def _compositions(total, parts):
    """Ordered tuples of `parts` non-negative integers summing to `total`."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


def picard_integrate(model, flow, order=DEFAULT_PICARD_ORDER) -> list:
    """
    Coefficients P_0 .. P_order of the formal solution P(e) = sum e^m P_m of
    dP/de = Q(P), P(0) = model.P:

        (m + 1) P_{m+1} = sum over m_1 + ... + m_n = m of Q(P_{m_1}, ..., P_{m_n})
    """
    if order > MAX_PICARD_ORDER:
        raise ResourceGuardError('Picard order', order, MAX_PICARD_ORDER)
    flow = get_flow(flow)
    coefficients = [model.P]
    if flow.arity == 0:
        return coefficients + [SuperPoly.zero(model.r)] * order

    for m in range(order):
        total = SuperPoly.zero(model.r)
        for parts in _compositions(m, flow.arity):
            contents = [coefficients[i] for i in parts]
            if any(c.is_zero() for c in contents):
                continue
            total = total + flow.multilinear(contents)
        coefficients.append(total.scale(QQ(1, m + 1)))
        log.debug('Picard order {}: {} terms'.format(m + 1, len(coefficients[-1].term_keys())))
    return coefficients


def series(coefficients: list) -> SuperPoly:
    """sum e^m P_m with e carried as a parameter."""
    eps = DiffPoly.parameter(EPSILON)
    out = SuperPoly.zero(coefficients[0].r)
    for m, P in enumerate(coefficients):
        out = out + P.scale(eps ** m)
    return out


def truncate(A: SuperPoly, order: int) -> SuperPoly:
    """Drops every term of e-degree >= order."""
    eps = parameter_var(EPSILON)

    def cut(c):
        return DiffPoly({mono: v for mono, v in c.terms.items() if dict(mono).get(eps, 0) < order})

    return A.map_coefficients(cut)


def series_defect(flow, coefficients: list) -> SuperPoly:
    """dP/de - Q(P) for the truncated series, modulo e^order. Zero when the
    coefficients solve the flow."""
    flow = get_flow(flow)
    order = len(coefficients) - 1
    P = series(coefficients)
    dP = P.map_coefficients(lambda c: c.partial(parameter_var(EPSILON)))
    if flow.arity == 0:
        Q = SuperPoly.zero(P.r)
    else:
        Q = flow.multilinear([P] * flow.arity)
    return truncate(dP - Q, order)


def exponential_coefficients(P: SuperPoly, order: int) -> list:
    """P_m = P / m!, the integral of the scaling flow."""
    if not isinstance(order, int) or order < 0:
        raise DegreeError('Order must be a non-negative integer')
    return [P.scale(QQ(1, factorial(m))) for m in range(order + 1)]
