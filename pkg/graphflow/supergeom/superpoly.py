"""
Polynomials in the odd generators xi_1..xi_r with differential polynomial
coefficients. A term is stored under its strictly increasing xi index tuple;
xi_i xi_j = -xi_j xi_i and xi_i^2 = 0.
"""

from graphflow.core.numbers import to_qq
from graphflow.exceptions import DimensionMismatchError, DegreeError
from graphflow.supergeom.diffpoly import DiffPoly


def merge_sign(I, J):
    """Sign and sorted union of xi_I xi_J, or (0, None) if they share an index."""
    if set(I) & set(J):
        return 0, None
    inversions = 0
    for a in I:
        for b in J:
            if b < a:
                inversions += 1
    return (-1 if inversions % 2 else 1), tuple(sorted(I + J))


def sort_xi(indices):
    """Sign and sorted tuple of a product of xi's listed in the given order."""
    indices = list(indices)
    if len(set(indices)) != len(indices):
        return 0, None
    inversions = 0
    for i in range(len(indices)):
        for j in range(i + 1, len(indices)):
            if indices[j] < indices[i]:
                inversions += 1
    return (-1 if inversions % 2 else 1), tuple(sorted(indices))


class SuperPoly:
    __slots__ = ('r', 'terms', '_hash')

    def __init__(self, r: int, terms=None):
        self.r = r
        self.terms = {}
        self._hash = None
        if terms:
            for xi, coefficient in terms.items():
                sign, key = sort_xi(xi)
                if not sign:
                    continue
                if any(not 1 <= i <= r for i in key):
                    raise DimensionMismatchError('xi index out of range 1..{} in {}'.format(r, xi))
                if not isinstance(coefficient, DiffPoly):
                    coefficient = DiffPoly.constant(coefficient)
                value = self.terms.get(key, DiffPoly()) + coefficient * sign
                if value:
                    self.terms[key] = value
                else:
                    self.terms.pop(key, None)

    @classmethod
    def _raw(cls, r, terms):
        s = cls.__new__(cls)
        s.r, s.terms, s._hash = r, terms, None
        return s

    @classmethod
    def zero(cls, r):
        return cls._raw(r, {})

    @classmethod
    def scalar(cls, r, value):
        value = value if isinstance(value, DiffPoly) else DiffPoly.constant(value)
        return cls._raw(r, {(): value} if value else {})

    # Protocol

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, SuperPoly) and self.r == other.r and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.r, frozenset(self.terms.items())))
        return self._hash

    def items(self):
        return sorted(self.terms.items(), key=lambda item: (len(item[0]), item[0]))

    def coefficient(self, xi):
        sign, key = sort_xi(xi)
        if not sign:
            return DiffPoly()
        return self.terms.get(key, DiffPoly()) * sign

    def degrees(self):
        return {len(xi) for xi in self.terms}

    @property
    def degree(self):
        """The xi-degree if homogeneous and nonzero, else None."""
        degrees = self.degrees()
        return degrees.pop() if len(degrees) == 1 else None

    def term_keys(self):
        """(xi, monomial) pairs of every stored coefficient entry."""
        return {(xi, mono) for xi, c in self.terms.items() for mono in c.terms}

    def flat(self):
        """(xi, monomial) -> rational, the coordinates used by the linear solvers."""
        return {(xi, mono): value for xi, c in self.terms.items() for mono, value in c.terms.items()}

    def _check(self, other):
        if self.r != other.r:
            raise DimensionMismatchError('Dimensions differ: {} vs {}'.format(self.r, other.r))

    # Arithmetic

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for xi, c in other.terms.items():
            value = out[xi] + c if xi in out else c
            if value:
                out[xi] = value
            else:
                out.pop(xi, None)
        return SuperPoly._raw(self.r, out)

    def __neg__(self):
        return SuperPoly._raw(self.r, {xi: -c for xi, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor):
        """Multiplies by a rational or by an even DiffPoly."""
        if not isinstance(factor, DiffPoly):
            factor = DiffPoly.constant(to_qq(factor))
        out = {}
        for xi, c in self.terms.items():
            value = c * factor
            if value:
                out[xi] = value
        return SuperPoly._raw(self.r, out)

    def __rmul__(self, factor):
        return self.scale(factor)

    def wedge(self, other):
        self._check(other)
        out = {}
        for I, a in self.terms.items():
            for J, b in other.terms.items():
                sign, key = merge_sign(I, J)
                if not sign:
                    continue
                value = a * b
                if sign < 0:
                    value = -value
                total = out[key] + value if key in out else value
                if total:
                    out[key] = total
                else:
                    out.pop(key, None)
        return SuperPoly._raw(self.r, out)

    __xor__ = wedge

    # Calculus

    def x_derivative(self, i):
        out = {}
        for xi, c in self.terms.items():
            d = c.total_derivative(i)
            if d:
                out[xi] = d
        return SuperPoly._raw(self.r, out)

    def _xi_derivative(self, i, right):
        out = {}
        for xi, c in self.terms.items():
            if i not in xi:
                continue
            pos = xi.index(i)
            flips = len(xi) - 1 - pos if right else pos
            key = xi[:pos] + xi[pos + 1:]
            value = -c if flips % 2 else c
            out[key] = out[key] + value if key in out else value
        return SuperPoly._raw(self.r, {k: v for k, v in out.items() if v})

    def left_derivative(self, i):
        return self._xi_derivative(i, right=False)

    def right_derivative(self, i):
        return self._xi_derivative(i, right=True)

    def map_coefficients(self, fn):
        out = {}
        for xi, c in self.terms.items():
            value = fn(c)
            if value:
                out[xi] = value
        return SuperPoly._raw(self.r, out)

    def substitute(self, functions=None, parameters=None, complete=False):
        cache = {}
        return self.map_coefficients(lambda c: c.substitute(functions, parameters, complete, cache))

    # Printing

    def __str__(self):
        if not self.terms:
            return '0'
        lines = []
        for xi, c in self.items():
            label = ' '.join('xi{}'.format(i) for i in xi) if xi else '1'
            lines.append('{}: {}'.format(label, c))
        return '\n'.join(lines)

    def __repr__(self):
        return 'SuperPoly(r={}, {})'.format(self.r, str(self).replace('\n', '; '))


# A multivector is a SuperPoly homogeneous in xi-degree.
Multivector = SuperPoly


def require_degree(A: SuperPoly, k: int, what='argument'):
    if A.is_zero():
        return
    if A.degrees() != {k}:
        raise DegreeError('{} must have xi-degree {}, found degrees {}'.format(what, k, sorted(A.degrees())))


def xi(r, *indices):
    return SuperPoly(r, {tuple(indices): 1})


def vector_field(r, components: dict):
    """components: i -> coefficient of xi_i."""
    return SuperPoly(r, {(i,): c for i, c in components.items()})


def bivector(r, components: dict):
    """components: (i, j) -> P^ij; (j, i) entries are read antisymmetrically."""
    return SuperPoly(r, {(i, j): c for (i, j), c in components.items()})


def component_name(prefix, i, j):
    return '{}{}{}'.format(prefix, i, j)


def abstract_bivector(r, prefix='P'):
    """P = sum_{i<j} P^ij xi_i xi_j with abstract function symbols P12, P13, ..."""
    return bivector(r, {(i, j): DiffPoly.symbol(component_name(prefix, i, j))
                        for i in range(1, r + 1) for j in range(i + 1, r + 1)})


def abstract_components(r, prefix='P'):
    return [component_name(prefix, i, j) for i in range(1, r + 1) for j in range(i + 1, r + 1)]


def bivector_components(P: SuperPoly) -> dict:
    """(i, j) -> P^ij for all ordered pairs, antisymmetric, zero entries omitted."""
    out = {}
    for (i, j), c in ((xi, c) for xi, c in P.terms.items() if len(xi) == 2):
        out[(i, j)] = c
        out[(j, i)] = -c
    return out
