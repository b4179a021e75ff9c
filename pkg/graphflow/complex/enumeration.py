"""
Enumeration of nonzero simple graphs with n vertices and E edges up to
isomorphism. Two strategies that visit the graphs in different orders:

    bitmask  - canonicalize every E-subset of the vertex pairs
    growth   - extend every canonical graph with E - 1 edges by one more pair and
               canonicalize again, zero graphs included, filtering at the end

Both go through the active labeler.
"""

from itertools import combinations
from math import comb

from graphflow.constants.limits import MAX_ENUMERATE_VERTICES, MAX_ENUMERATE_SUBSETS
from graphflow.exceptions import ResourceGuardError, InputException
from graphflow.graphs.graph import UnorientedGraph
from graphflow.logger.base import get_logger

log = get_logger('Enumeration')

STRATEGIES = ('bitmask', 'growth')


def _check(n, E):
    if n < 1 or E < 0:
        raise InputException('Need n >= 1 and E >= 0, got ({}, {})'.format(n, E))
    if n > MAX_ENUMERATE_VERTICES:
        raise ResourceGuardError('vertex count', n, MAX_ENUMERATE_VERTICES)


def _bitmask(n, E):
    pairs = list(combinations(range(n), 2))
    subsets = comb(len(pairs), E)
    if subsets > MAX_ENUMERATE_SUBSETS:
        raise ResourceGuardError('edge subsets', subsets, MAX_ENUMERATE_SUBSETS)

    found = set()
    for edges in combinations(pairs, E):
        canon, sign = UnorientedGraph._trusted(n, edges).canonical_form()
        if sign != 0:
            found.add(canon)
    return found


def _growth(n, E):
    pairs = list(combinations(range(n), 2))
    if E > len(pairs):
        return set()

    level = {UnorientedGraph(n).canonical_form()[0]: True}
    for size in range(E):
        following = {}
        for g in level:
            present = set(g.edges)
            for pair in pairs:
                if pair in present:
                    continue
                canon, sign = UnorientedGraph._trusted(n, g.edges + (pair,)).canonical_form()
                following[canon] = sign != 0
        log.spam('growth n={}: {} classes with {} edges'.format(n, len(following), size + 1))
        level = following

    return {g for g, nonzero in level.items() if nonzero}


def enumerate_graphs(n: int, E: int, strategy='bitmask', connected=False, min_valence=0) -> list:
    _check(n, E)
    if strategy == 'bitmask':
        found = _bitmask(n, E)
    elif strategy == 'growth':
        found = _growth(n, E)
    else:
        raise InputException('Unknown enumeration strategy {!r}, expected one of {}'.format(strategy, STRATEGIES))

    graphs = sorted(found, key=lambda g: g.sort_key())
    if connected:
        from graphflow.graphs.stats import to_networkx
        import networkx as nx
        graphs = [g for g in graphs if nx.is_connected(to_networkx(g))]
    if min_valence:
        graphs = [g for g in graphs if all(g.degree(v) >= min_valence for v in range(g.n))]
    log.info('enumerate({}, {}) via {}: {} nonzero graphs'.format(n, E, strategy, len(graphs)))
    return graphs
