"""
Exact rational linear combinations of canonical unoriented graphs.
"""

from graphflow.core.numbers import to_qq, format_qq, parse_qq, ZERO
from graphflow.exceptions import FormatError, StructuralInputError
from graphflow.graphs.graph import UnorientedGraph


class GraphSum:
    __slots__ = ('_terms',)

    def __init__(self, terms=None, permissive=False):
        """
        terms: dict or iterable of (graph, coefficient). Graphs are canonicalized and
        their signs absorbed. With permissive=True a term that is not a valid graph
        (given as (n, edges)) contributes zero instead of raising.
        """
        self._terms = {}
        if terms is None:
            return
        items = terms.items() if isinstance(terms, dict) else terms
        for graph, coefficient in items:
            if not isinstance(graph, UnorientedGraph):
                n, edges = graph
                try:
                    graph = UnorientedGraph(n, edges)
                except StructuralInputError:
                    if permissive:
                        continue
                    raise
            self._accumulate(graph, to_qq(coefficient))

    def _accumulate(self, graph, coefficient):
        if not coefficient:
            return
        canon, sign = graph.canonical_form()
        if sign == 0:
            return
        value = self._terms.get(canon, ZERO) + sign * coefficient
        if value:
            self._terms[canon] = value
        else:
            self._terms.pop(canon, None)

    @classmethod
    def _from_canonical(cls, terms: dict):
        s = cls.__new__(cls)
        s._terms = {g: c for g, c in terms.items() if c}
        return s

    @classmethod
    def of(cls, graph: UnorientedGraph, coefficient=1):
        return cls([(graph, coefficient)])

    # Container protocol

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self.items())

    def __contains__(self, graph):
        return graph.canonical_form()[0] in self._terms

    def items(self):
        return sorted(self._terms.items(), key=lambda item: item[0].sort_key())

    def graphs(self):
        return [g for g, _ in self.items()]

    def coefficient(self, graph):
        canon, sign = graph.canonical_form()
        return sign * self._terms.get(canon, ZERO)

    def is_empty(self):
        return not self._terms

    @property
    def bigrading(self):
        gradings = {g.bigrading for g in self._terms}
        return gradings.pop() if len(gradings) == 1 else None

    # Arithmetic

    def __add__(self, other):
        out = dict(self._terms)
        for g, c in other._terms.items():
            out[g] = out.get(g, ZERO) + c
        return GraphSum._from_canonical(out)

    def __neg__(self):
        return GraphSum._from_canonical({g: -c for g, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = to_qq(c)
        return GraphSum._from_canonical({g: c * v for g, v in self._terms.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        return isinstance(other, GraphSum) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        return 'GraphSum({})'.format(', '.join('{}: {}'.format(format_qq(c), g.encode()) for g, c in self.items()))

    # Text format: coeff<TAB>n E u v u v ...

    def dumps(self) -> str:
        return ''.join('{}\t{}\n'.format(format_qq(c), g.encode()) for g, c in self.items())

    @classmethod
    def loads(cls, text: str):
        terms = []
        for number, line in enumerate(text.splitlines(), 1):
            line = line.strip()
            if not line or line.startswith('#'):
                continue
            if '\t' in line:
                coefficient, record = line.split('\t', 1)
            else:
                coefficient, _, record = line.partition(' ')
            try:
                terms.append((UnorientedGraph.decode(record), parse_qq(coefficient)))
            except FormatError as e:
                raise FormatError('line {}: {}'.format(number, e))
        return cls(terms)


def sum_add(s1: GraphSum, s2: GraphSum) -> GraphSum:
    return s1 + s2


def sum_scale(s: GraphSum, c) -> GraphSum:
    return s.scale(c)


def read_graph_sum(path) -> GraphSum:
    with open(path) as f:
        return GraphSum.loads(f.read())


def write_graph_sum(s: GraphSum, path):
    with open(path, 'w') as f:
        f.write(s.dumps())
