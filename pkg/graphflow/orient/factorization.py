"""
Iterative Leibniz-graph ansatz for factorization problems

    [[P, Q(P)]] = diamond(P, [[P, P]])

Round 1 seeds the ansatz with the Leibniz graphs obtained from the cocycle
(Jacobiator placed at each vertex, every edge oriented both ways). Later rounds
draw from the full shape space of Leibniz graphs with the target's number of
bivector vertices and sinks, ordered by (vertex count, canonical encoding).
Only candidates whose expansion shares a term with the current residual enter a
round; the rest rotate to the back of the queue.
"""

from typing import NamedTuple

from graphflow.constants.limits import DEFAULT_LEIBNIZ_ROUNDS, LEIBNIZ_ROUND_BATCH, MAX_LEIBNIZ_CANDIDATES
from graphflow.containers.linked_hashtable import LinkedHashTable
from graphflow.core import linalg
from graphflow.exceptions import DegreeError
from graphflow.logger.base import get_logger
from graphflow.orient.leibniz import DirectedEvaluator, leibniz_graphs_from_cocycle, leibniz_shape_space, \
    target_shape, normalize
from graphflow.supergeom.superpoly import SuperPoly, abstract_components

log = get_logger('Factorization')


class RoundLog(NamedTuple):
    round: int
    offered: int
    accepted: int
    columns: int
    residual_terms: int

    def format(self):
        return 'round {}: offered {} accepted {} columns {} residual terms {}'.format(*self)


class FactorizationResult(NamedTuple):
    diamond: dict
    residual: SuperPoly
    rounds: list

    @property
    def solved(self):
        return self.residual.is_zero()

    def report(self):
        lines = ['solved: {}'.format('true' if self.solved else 'false'),
                 'leibniz graphs: {}'.format(len(self.diamond))]
        lines.extend(r.format() for r in self.rounds)
        if not self.solved:
            lines.append('residual terms: {}'.format(len(self.residual.term_keys())))
        return '\n'.join(lines)


def _shares(expansion: SuperPoly, residual_keys: set):
    return any(key in residual_keys for key in expansion.flat())


def leibniz_ansatz_iterate(target: SuperPoly, P: SuperPoly, max_rounds=DEFAULT_LEIBNIZ_ROUNDS, hint=None,
                           batch=LEIBNIZ_ROUND_BATCH, prefix='P', limit=MAX_LEIBNIZ_CANDIDATES):
    """
    target: homogeneous universal trivector in the abstract components of P.
    hint: optional GraphSum (the cocycle) whose Leibniz graphs seed round 1.
    Returns the best FactorizationResult found within max_rounds.
    """
    target._check(P)
    if target.is_zero():
        return FactorizationResult({}, target, [])

    N, m = target_shape(target, set(abstract_components(P.r, prefix)))
    bivectors = N - 2
    if bivectors < 0:
        raise DegreeError('Target has bivector degree {}, a Leibniz graph needs at least 2'.format(N))

    evaluator = DirectedEvaluator(P)
    expansions = {}

    def expansion(graph):
        value = expansions.get(graph)
        if value is None:
            value = evaluator.expand(graph)
            expansions[graph] = value
        return value

    seeds = []
    if hint is not None:
        seeds = [L for L in leibniz_graphs_from_cocycle(hint) if L.bivector_count == bivectors and L.sinks == m]
        log.info('Seeding round 1 with {} Leibniz graphs from the cocycle'.format(len(seeds)))

    queue = None
    graphs, columns = [], []
    used = set()
    rhs = target.flat()
    best = FactorizationResult({}, target, [])
    residual = target
    rounds = []

    for number in range(1, max_rounds + 1):
        residual_keys = set(residual.flat())
        if number == 1 and seeds:
            offered = len(seeds)
            chosen = [L for L in seeds if L not in used and _shares(expansion(L), residual_keys)]
        else:
            if queue is None:
                queue = LinkedHashTable()
                for L in leibniz_shape_space(bivectors, m, limit):
                    if L not in used:
                        queue.append(L.encode(), L)
            chosen, offered = [], 0
            for _ in range(len(queue)):
                if len(chosen) >= batch:
                    break
                key, L = queue.pop_front()
                offered += 1
                if _shares(expansion(L), residual_keys):
                    chosen.append(L)
                else:
                    queue.append(key, L)

        chosen = [L for L in chosen if L not in used]
        if not chosen:
            log.info('Round {}: no candidate touches the residual, stopping'.format(number))
            break

        for L in chosen:
            used.add(L)
            if queue is not None and L.encode() in queue:
                queue.remove(L.encode())
            graphs.append(L)
            columns.append(expansion(L).flat())

        solution, consistent = linalg.solve(columns, rhs)
        diamond = normalize((graphs[j], c) for j, c in solution.items())
        residual = target
        for L, c in sorted(diamond.items(), key=lambda item: item[0].sort_key()):
            residual = residual - expansion(L).scale(c)

        entry = RoundLog(number, offered, len(chosen), len(columns), len(residual.term_keys()))
        rounds.append(entry)
        log.notice(entry.format())

        if len(residual.term_keys()) < len(best.residual.term_keys()):
            best = FactorizationResult(diamond, residual, list(rounds))
        if residual.is_zero():
            break

    return FactorizationResult(best.diamond, best.residual, rounds)
