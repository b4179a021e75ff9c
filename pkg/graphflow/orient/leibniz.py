"""
Leibniz graphs and Kontsevich oriented graphs.

Internal vertices 0..k-1 are either bivector vertices ('P', two ordered slots)
or the Jacobiator vertex ('J', three ordered slots); a graph without a 'J'
vertex is a Kontsevich orgraph. Every slot is an arrow to a target: an
internal vertex t < k, or sink j encoded as k + j. Each sink receives exactly
one arrow.

Directed evaluation: with T_v the antisymmetric coefficient tensor of the
vertex content,

    value = 1/m! * sum over arrow indices  prod_v (d^{incoming(v)} T_v^{slots(v)})
                    * xi_{index at sink 0} ... xi_{index at sink m-1}

A bivector vertex carries P; the Jacobiator vertex carries the trivector of
sum_cyc {{f, g}, h}, which equals -jacobiator(P).
"""

from itertools import combinations, permutations, product
from math import comb, factorial

from sympy import QQ

from graphflow.constants.limits import MAX_LEIBNIZ_CANDIDATES
from graphflow.core.numbers import sign_of_permutation, format_qq, parse_qq, to_qq, ZERO
from graphflow.exceptions import MalformedLeibnizGraph, FormatError, ResourceGuardError, DegreeError
from graphflow.graphs.graph_sum import GraphSum
from graphflow.logger.base import get_logger
from graphflow.supergeom.diffpoly import DiffPoly
from graphflow.supergeom.schouten import jacobiator
from graphflow.supergeom.superpoly import SuperPoly, sort_xi, bivector_components, require_degree

log = get_logger('Leibniz')

ARITY = {'P': 2, 'J': 3}
CYCLIC = ((0, 1, 2), (1, 2, 0), (2, 0, 1))


class LeibnizGraph:
    __slots__ = ('vertices', 'sinks', '_canonical')

    def __init__(self, vertices, sinks: int):
        vertices = tuple((kind, tuple(targets)) for kind, targets in vertices)
        k = len(vertices)
        if sum(1 for kind, _ in vertices if kind == 'J') > 1:
            raise MalformedLeibnizGraph('At most one Jacobiator vertex is allowed')

        hits = [0] * sinks
        for v, (kind, targets) in enumerate(vertices):
            if kind not in ARITY:
                raise MalformedLeibnizGraph('Unknown vertex kind {!r}'.format(kind))
            if len(targets) != ARITY[kind]:
                raise MalformedLeibnizGraph('{} vertex {} needs {} slots, has {}'.format(kind, v, ARITY[kind], len(targets)))
            for t in targets:
                if not 0 <= t < k + sinks:
                    raise MalformedLeibnizGraph('Target {} of vertex {} out of range'.format(t, v))
                if t == v:
                    raise MalformedLeibnizGraph('Tadpole at vertex {}'.format(v))
                if t >= k:
                    hits[t - k] += 1
        if any(h != 1 for h in hits):
            raise MalformedLeibnizGraph('Every sink must receive exactly one arrow, got {}'.format(hits))

        self.vertices = vertices
        self.sinks = sinks
        self._canonical = None

    @property
    def k(self):
        return len(self.vertices)

    @property
    def jacobiator_vertex(self):
        return next((v for v, (kind, _) in enumerate(self.vertices) if kind == 'J'), None)

    @property
    def bivector_count(self):
        return sum(1 for kind, _ in self.vertices if kind == 'P')

    def __eq__(self, other):
        return isinstance(other, LeibnizGraph) and self.sinks == other.sinks and self.vertices == other.vertices

    def __hash__(self):
        return hash((self.sinks, self.vertices))

    def sort_key(self):
        return self.k, self.sinks, self.vertices

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return 'LeibnizGraph({!r})'.format(self.encode())

    def has_double_arrow(self):
        return any(len(set(targets)) != len(targets) for _, targets in self.vertices)

    def incoming(self, v):
        return sum(1 for _, targets in self.vertices for t in targets if t == v)

    # Canonical form

    def canonical_form(self):
        """(canonical graph, sign) with self = sign * canonical. Sign 0 for zero graphs."""
        if self._canonical is not None:
            return self._canonical
        if self.has_double_arrow():
            self._canonical = (self, 0)
            return self._canonical

        k, m = self.k, self.sinks
        j = self.jacobiator_vertex
        others = [v for v in range(k) if v != j]
        best, parities = None, set()
        for order in permutations(others):
            layout = ([j] if j is not None else []) + list(order)
            position = {old: new for new, old in enumerate(layout)}
            for tau in permutations(range(m)):
                sign = sign_of_permutation(tau)
                vertices = [None] * k
                for old, (kind, targets) in enumerate(self.vertices):
                    moved = [position[t] if t < k else k + tau[t - k] for t in targets]
                    sign *= sign_of_permutation(moved)
                    vertices[position[old]] = (kind, tuple(sorted(moved)))
                key = tuple(vertices)
                if best is None or key < best:
                    best, parities = key, {sign}
                elif key == best:
                    parities.add(sign)

        canon = LeibnizGraph.__new__(LeibnizGraph)
        canon.vertices, canon.sinks = best, m
        sign = parities.pop() if len(parities) == 1 else 0
        canon._canonical = (canon, 1 if sign else 0)
        self._canonical = (canon, sign)
        return self._canonical

    def is_zero(self):
        return self.canonical_form()[1] == 0

    # Text encoding: "k m;J 1 2 s0;P 0 s1;..."

    def encode(self):
        k = self.k
        parts = ['{} {}'.format(k, self.sinks)]
        for kind, targets in self.vertices:
            parts.append(' '.join([kind] + [str(t) if t < k else 's{}'.format(t - k) for t in targets]))
        return ';'.join(parts)

    @classmethod
    def decode(cls, text: str):
        chunks = [c.strip() for c in text.strip().split(';')]
        try:
            k, m = (int(tok) for tok in chunks[0].split())
        except ValueError:
            raise FormatError('Leibniz graph header must be "k sinks": {!r}'.format(text))
        if len(chunks) - 1 != k:
            raise FormatError('Header announces {} vertices, found {}'.format(k, len(chunks) - 1))
        vertices = []
        for chunk in chunks[1:]:
            tokens = chunk.split()
            if not tokens:
                raise FormatError('Empty vertex record in {!r}'.format(text))
            targets = []
            for tok in tokens[1:]:
                try:
                    targets.append(k + int(tok[1:]) if tok.startswith('s') else int(tok))
                except ValueError:
                    raise FormatError('Bad target {!r} in {!r}'.format(tok, text))
            vertices.append((tokens[0], targets))
        return cls(vertices, m)


def bare_jacobiator():
    return LeibnizGraph([('J', (1, 2, 3))], 3)


# Linear combinations of Leibniz graphs (the factorization diamond)

def normalize(combination) -> dict:
    """Canonicalizes an iterable/dict of (LeibnizGraph, coefficient), dropping zeros."""
    out = {}
    items = combination.items() if isinstance(combination, dict) else combination
    for graph, c in items:
        canon, sign = graph.canonical_form()
        if not sign or not c:
            continue
        value = out.get(canon, ZERO) + sign * to_qq(c)
        if value:
            out[canon] = value
        else:
            out.pop(canon, None)
    return out


def dumps_combination(combination: dict) -> str:
    return ''.join('{}\t{}\n'.format(format_qq(c), g.encode())
                   for g, c in sorted(combination.items(), key=lambda item: item[0].sort_key()))


def loads_combination(text: str) -> dict:
    terms = []
    for number, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        coefficient, _, record = line.partition('\t')
        try:
            terms.append((LeibnizGraph.decode(record), parse_qq(coefficient)))
        except FormatError as e:
            raise FormatError('line {}: {}'.format(number, e))
    return normalize(terms)


# Tensors and directed evaluation

def bivector_tensor(P: SuperPoly) -> dict:
    return bivector_components(P)


def trivector_tensor(T: SuperPoly) -> dict:
    out = {}
    for xi, c in T.terms.items():
        if len(xi) != 3:
            continue
        for perm in permutations(range(3)):
            out[tuple(xi[p] for p in perm)] = c if sign_of_permutation(perm) > 0 else -c
    return out


def jacobiator_content(P: SuperPoly) -> SuperPoly:
    """Trivector carried by the Jacobiator vertex: sum_cyc {{f, g}, h}."""
    return -jacobiator(P)


class DirectedEvaluator:
    """Evaluates Leibniz graphs and orgraphs at one bivector P, caching tensor derivatives."""

    def __init__(self, P: SuperPoly):
        require_degree(P, 2, 'bivector')
        self.P = P
        self.r = P.r
        self.tensors = {'P': sorted(bivector_tensor(P).items())}
        self._derivatives = {}
        self._values = {}

    def tensor(self, kind):
        if kind == 'J' and kind not in self.tensors:
            self.tensors['J'] = sorted(trivector_tensor(jacobiator_content(self.P)).items())
        return self.tensors[kind]

    def derivative(self, kind, index, value, alpha):
        key = (kind, index, alpha)
        cached = self._derivatives.get(key)
        if cached is None:
            cached = value.derivative(alpha) if alpha else value
            self._derivatives[key] = cached
        return cached

    def expand(self, graph: LeibnizGraph) -> SuperPoly:
        return evaluate_combination(expand_leibniz_graphs(graph), self.P, self)

    def __call__(self, graph: LeibnizGraph) -> SuperPoly:
        value = self._values.get(graph)
        if value is None:
            value = self._evaluate(graph)
            self._values[graph] = value
        return value

    def _evaluate(self, graph):
        k, m = graph.k, graph.sinks
        if graph.has_double_arrow():
            return SuperPoly.zero(self.r)
        entries = [self.tensor(kind) for kind, _ in graph.vertices]
        total = {}
        for choice in product(*entries):
            incoming = [[] for _ in range(k)]
            at_sink = [None] * m
            for (kind, targets), (index, _) in zip(graph.vertices, choice):
                for t, i in zip(targets, index):
                    if t < k:
                        incoming[t].append(i)
                    else:
                        at_sink[t - k] = i
            sign, key = sort_xi(at_sink)
            if not sign:
                continue
            value = DiffPoly.constant(sign)
            for v, ((kind, _), (index, entry)) in enumerate(zip(graph.vertices, choice)):
                value = value * self.derivative(kind, index, entry, tuple(sorted(incoming[v])))
                if not value:
                    break
            if value:
                total[key] = total[key] + value if key in total else value
        scale = QQ(1, factorial(m))
        return SuperPoly._raw(self.r, {key: v.scale(scale) for key, v in total.items() if v})


def evaluate_directed(graph: LeibnizGraph, P: SuperPoly) -> SuperPoly:
    return DirectedEvaluator(P)(graph)


def evaluate_combination(combination: dict, P: SuperPoly, evaluator=None) -> SuperPoly:
    evaluator = evaluator or DirectedEvaluator(P)
    out = SuperPoly.zero(P.r)
    for g, c in sorted(combination.items(), key=lambda item: item[0].sort_key()):
        out = out + evaluator(g).scale(c)
    return out


# Expansion of the Jacobiator vertex

def expand_leibniz_graphs(graph: LeibnizGraph) -> dict:
    """
    Replaces the Jacobiator vertex j by the three cyclic terms {{t_a, t_b}, t_c}:
    a (at index j) with slots (t_a, t_b) and a new vertex b with slots (a, t_c).
    Arrows into j go to a or to b in all possible ways. Returns the canonical
    orgraph combination.
    """
    j = graph.jacobiator_vertex
    if j is None:
        return normalize([(graph, 1)])

    k, m = graph.k, graph.sinks
    b = k

    def shift(t):
        return t if t < k else t + 1

    slots_into_j = [(v, s) for v, (_, targets) in enumerate(graph.vertices) for s, t in enumerate(targets) if t == j]
    J_targets = [shift(t) for t in graph.vertices[j][1]]

    terms = []
    for sigma in CYCLIC:
        for routing in product((j, b), repeat=len(slots_into_j)):
            route = dict(zip(slots_into_j, routing))
            vertices = []
            for v, (kind, targets) in enumerate(graph.vertices):
                if v == j:
                    vertices.append(('P', (J_targets[sigma[0]], J_targets[sigma[1]])))
                else:
                    vertices.append((kind, tuple(route.get((v, s), shift(t)) if t == j else shift(t)
                                                 for s, t in enumerate(targets))))
            vertices.append(('P', (j, J_targets[sigma[2]])))
            terms.append((LeibnizGraph(vertices, m), 1))
    return normalize(terms)


def expand_leibniz(graph: LeibnizGraph, P: SuperPoly, evaluator=None) -> SuperPoly:
    return evaluate_combination(expand_leibniz_graphs(graph), P, evaluator)


# Leibniz graphs from a cocycle: Jacobiator at a vertex, every edge oriented

def leibniz_graphs_from_cocycle(gamma: GraphSum) -> list:
    found = set()
    for g, _ in gamma.items():
        E = g.edge_count
        for jv in range(g.n):
            arity = [3 if v == jv else 2 for v in range(g.n)]
            sinks = sum(arity) - E
            if sinks < 0:
                continue
            for orientation in product((0, 1), repeat=E):
                out = [[] for _ in range(g.n)]
                for (u, v), flip in zip(g.edges, orientation):
                    source, target = (u, v) if flip == 0 else (v, u)
                    out[source].append(target)
                if any(len(out[v]) > arity[v] for v in range(g.n)):
                    continue
                vertices, sink = [], 0
                for v in range(g.n):
                    targets = list(out[v])
                    while len(targets) < arity[v]:
                        targets.append(g.n + sink)
                        sink += 1
                    vertices.append(('J' if v == jv else 'P', targets))
                canon, sign = LeibnizGraph(vertices, sinks).canonical_form()
                if sign:
                    found.add(canon)
    return sorted(found, key=lambda L: L.sort_key())


# Shape space: all Leibniz graphs with one Jacobiator and p bivector vertices

def leibniz_shape_space(bivectors: int, sinks: int, limit=MAX_LEIBNIZ_CANDIDATES) -> list:
    k = bivectors + 1
    arity = [3] + [2] * bivectors
    owners = [v for v in range(k) for _ in range(arity[v])]
    S = len(owners)
    if sinks > S:
        return []
    raw = comb(S, sinks) * max(k - 1, 1) ** (S - sinks)
    if raw > 100 * limit:
        raise ResourceGuardError('raw Leibniz candidates', raw, 100 * limit)

    found = set()
    for sink_slots in combinations(range(S), sinks):
        internal = [s for s in range(S) if s not in sink_slots]
        choices = [[t for t in range(k) if t != owners[s]] for s in internal]
        for picks in product(*choices):
            assignment = [None] * S
            for j, s in enumerate(sink_slots):
                assignment[s] = k + j
            for s, t in zip(internal, picks):
                assignment[s] = t
            vertices, cursor = [], 0
            for v in range(k):
                vertices.append(('J' if v == 0 else 'P', assignment[cursor:cursor + arity[v]]))
                cursor += arity[v]
            graph = LeibnizGraph(vertices, sinks)
            if graph.has_double_arrow():
                continue
            canon, sign = graph.canonical_form()
            if sign:
                found.add(canon)
        if len(found) > limit:
            raise ResourceGuardError('Leibniz candidates', len(found), limit)

    out = sorted(found, key=lambda L: L.encode())
    log.info('Shape space J+{}P with {} sinks: {} nonzero Leibniz graphs'.format(bivectors, sinks, len(out)))
    return out


def target_shape(target: SuperPoly, names) -> tuple:
    """(bivector degree N, sinks m) of a homogeneous universal expression in the
    abstract components `names`."""
    m = target.degree
    if m is None:
        raise DegreeError('Target must be homogeneous and nonzero')
    degrees = set()
    for c in target.terms.values():
        for mono in c.terms:
            degrees.add(sum(e for (kind, name, _), e in mono if kind == 'f' and name in names))
    if len(degrees) != 1:
        raise DegreeError('Target is not homogeneous in the bivector: degrees {}'.format(sorted(degrees)))
    return degrees.pop(), m
