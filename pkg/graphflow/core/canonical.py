"""
Canonical labeling of small simple graphs whose edges carry a wedge order.

A labeling backend maps (n, edges) to the lexicographically least relabeled
sorted edge list together with the sign of the edge permutation that brings
the relabeled wedge order into sorted order. The sign is 0 when two optimal
labelings disagree on that parity, i.e. when an automorphism permutes the
edges oddly.

Backends:
    ExhaustiveLabeler      - minimum over all n! vertex permutations
    PrunedSearchLabeler    - labels assigned position by position, branches whose
                             determined edge prefix exceeds the best one are cut (default)

Both return the same edge tuple and sign for every input.
"""

from itertools import permutations

from graphflow.constants.limits import MAX_CANONICAL_VERTICES
from graphflow.core.numbers import sign_of_permutation
from graphflow.exceptions import ResourceGuardError


def relabeled_edges(edges, labels):
    return [(labels[u], labels[v]) if labels[u] < labels[v] else (labels[v], labels[u]) for u, v in edges]


class Labeler:
    name = 'abstract'

    def canonical_labeling(self, n: int, edges) -> tuple:
        """Returns (canonical sorted edge tuple, sign in {-1, 0, 1})."""
        if n > MAX_CANONICAL_VERTICES:
            raise ResourceGuardError('vertex count', n, MAX_CANONICAL_VERTICES)
        best, parities = None, set()
        for labels in self.candidate_labelings(n, edges):
            relabeled = relabeled_edges(edges, labels)
            key = tuple(sorted(relabeled))
            if best is None or key < best:
                best, parities = key, {sign_of_permutation(relabeled)}
            elif key == best:
                parities.add(sign_of_permutation(relabeled))
        if best is None:
            return (), 1
        return best, (parities.pop() if len(parities) == 1 else 0)

    def candidate_labelings(self, n: int, edges):
        raise NotImplementedError


class ExhaustiveLabeler(Labeler):
    name = 'exhaustive'

    def candidate_labelings(self, n, edges):
        return permutations(range(n))


class PrunedSearchLabeler(Labeler):
    """
    Depth first over the vertex placed at position 0, 1, 2, ... Once positions
    0..k are filled, the sorted edge list of any completion starts with every
    row (i, *) whose vertex has all its neighbours placed, followed by the
    placed part of the first incomplete row: unplaced neighbours can only get
    positions above k. A branch is cut when that prefix is greater than the
    same prefix of the best complete list, so all optimal labelings are still
    reached and their parities compared.
    """
    name = 'pruned'

    def candidate_labelings(self, n, edges):
        adj = [set() for _ in range(n)]
        for u, v in edges:
            adj[u].add(v)
            adj[v].add(u)

        best = []
        order, position = [], {}

        def determined_prefix():
            prefix = []
            for i, v in enumerate(order):
                prefix.extend(sorted((i, position[w]) for w in adj[v] if w in position and position[w] > i))
                if any(w not in position for w in adj[v]):
                    break
            return prefix

        def search():
            prefix = determined_prefix()
            if best and tuple(prefix) > best[0][:len(prefix)]:
                return
            if len(order) == n:
                key = tuple(prefix)
                if not best or key < best[0]:
                    best[:] = [key]
                yield [position[v] for v in range(n)]
                return
            for v in range(n):
                if v in position:
                    continue
                position[v] = len(order)
                order.append(v)
                yield from search()
                order.pop()
                del position[v]

        return search()


_labeler = PrunedSearchLabeler()


def get_labeler() -> Labeler:
    return _labeler


def set_labeler(labeler: Labeler):
    global _labeler
    _labeler = labeler


def canonical_labeling(n: int, edges):
    return _labeler.canonical_labeling(n, edges)
