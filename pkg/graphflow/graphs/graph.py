"""
Unoriented graphs with parity-even vertices and a wedge order on parity-odd
edges. Vertices are 0..n-1; the order of the edge list is the wedge order, so
swapping two edges negates the graph.
"""

from graphflow.core import canonical
from graphflow.exceptions import TadpoleError, RepeatedEdgeError, VertexIndexError, FormatError


class UnorientedGraph:
    __slots__ = ('n', 'edges', '_canonical')

    def __init__(self, n: int, edges=()):
        if not isinstance(n, int) or n < 1:
            raise VertexIndexError('Vertex count must be a positive integer, got {!r}'.format(n))

        normalized = []
        seen = set()
        for edge in edges:
            u, v = edge
            if not (0 <= u < n and 0 <= v < n):
                raise VertexIndexError('Edge {} out of range for {} vertices'.format((u, v), n))
            if u == v:
                raise TadpoleError('Tadpole at vertex {}'.format(u))
            pair = (u, v) if u < v else (v, u)
            if pair in seen:
                raise RepeatedEdgeError('Repeated edge {}'.format(pair))
            seen.add(pair)
            normalized.append(pair)

        self.n = n
        self.edges = tuple(normalized)
        self._canonical = None

    @classmethod
    def _trusted(cls, n, edges):
        g = cls.__new__(cls)
        g.n, g.edges, g._canonical = n, tuple(edges), None
        return g

    @property
    def edge_count(self):
        return len(self.edges)

    @property
    def bigrading(self):
        return self.n, len(self.edges)

    def __eq__(self, other):
        return isinstance(other, UnorientedGraph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        return self.n, len(self.edges), self.edges

    def __repr__(self):
        return 'UnorientedGraph({}, {})'.format(self.n, list(self.edges))

    def degree(self, v):
        return sum(1 for e in self.edges if v in e)

    def neighbours(self, v):
        return [b if a == v else a for a, b in self.edges if v in (a, b)]

    def canonical_form(self):
        if self._canonical is None:
            edges, sign = canonical.canonical_labeling(self.n, self.edges)
            self._canonical = (UnorientedGraph._trusted(self.n, edges), sign)
        return self._canonical

    def is_zero(self):
        return self.canonical_form()[1] == 0

    def relabel(self, sigma):
        """Vertex v becomes sigma[v]; the wedge order of edges is unchanged."""
        if sorted(sigma) != list(range(self.n)):
            raise VertexIndexError('{} is not a permutation of {} vertices'.format(list(sigma), self.n))
        return UnorientedGraph._trusted(self.n, [tuple(sorted((sigma[u], sigma[v]))) for u, v in self.edges])

    def encode(self):
        parts = [str(self.n), str(len(self.edges))]
        for u, v in self.edges:
            parts += [str(u), str(v)]
        return ' '.join(parts)

    @classmethod
    def decode(cls, text: str):
        try:
            numbers = [int(tok) for tok in text.split()]
        except ValueError:
            raise FormatError('Graph record must be integers: {!r}'.format(text))
        if len(numbers) < 2:
            raise FormatError('Graph record needs a header "n E": {!r}'.format(text))
        n, count = numbers[0], numbers[1]
        body = numbers[2:]
        if len(body) != 2 * count:
            raise FormatError('Graph record announces {} edges but lists {} endpoints'.format(count, len(body)))
        return cls(n, [(body[2 * i], body[2 * i + 1]) for i in range(count)])

    @classmethod
    def from_edge_text(cls, text: str, n=None):
        """Parses "0 1;1 2;0 2" style edge lists. Vertex count defaults to the largest label + 1."""
        edges = []
        for chunk in text.split(';'):
            chunk = chunk.strip()
            if not chunk:
                continue
            try:
                u, v = (int(tok) for tok in chunk.split())
            except ValueError:
                raise FormatError('Edge must be two integers: {!r}'.format(chunk))
            edges.append((u, v))
        if n is None:
            n = max((max(e) for e in edges), default=0) + 1
        return cls(n, edges)


def canonical_form(g: UnorientedGraph):
    return g.canonical_form()


def is_zero(g: UnorientedGraph) -> bool:
    return g.is_zero()


def relabel(g: UnorientedGraph, sigma) -> UnorientedGraph:
    return g.relabel(sigma)


def stick():
    return UnorientedGraph(2, [(0, 1)])


def complete_graph(n: int):
    return UnorientedGraph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def single_vertex():
    return UnorientedGraph(1, [])
