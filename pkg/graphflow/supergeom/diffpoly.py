"""
Differential polynomials with exact rational coefficients.

Variables are tuples (kind, name, alpha):
    ('x', i, ())        coordinate x^i, 1-based
    ('f', name, alpha)  jet of the function symbol `name`, alpha a sorted tuple
                        of coordinate indices (partials commute)
    ('p', name, ())     constant parameter

A monomial is a sorted tuple of (variable, exponent) pairs. Jet variables are
created on demand by total differentiation.
"""

from graphflow.core.numbers import to_qq, format_qq, ZERO, ONE
from graphflow.exceptions import UnboundSymbolError


def coordinate_var(i):
    return ('x', i, ())


def jet_var(name, alpha=()):
    return ('f', name, tuple(sorted(alpha)))


def parameter_var(name):
    return ('p', name, ())


def _mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    powers = dict(m1)
    for var, e in m2:
        powers[var] = powers.get(var, 0) + e
    return tuple(sorted(powers.items()))


def _var_derivative(var, k):
    """Total derivative D_k of a single variable, as (variable or None, is_one)."""
    kind, name, alpha = var
    if kind == 'x':
        return None, name == k
    if kind == 'f':
        return ('f', name, tuple(sorted(alpha + (k,)))), False
    return None, False


def format_var(var):
    kind, name, alpha = var
    if kind == 'x':
        return 'x{}'.format(name)
    if kind == 'p' or not alpha:
        return name
    return 'd[{}]/{}'.format(name, ''.join('dx{}'.format(i) for i in alpha))


class DiffPoly:
    __slots__ = ('terms', '_hash')

    def __init__(self, terms=None):
        self.terms = {}
        self._hash = None
        if terms:
            for mono, c in terms.items():
                if c:
                    self.terms[mono] = c

    @classmethod
    def _raw(cls, terms):
        p = cls.__new__(cls)
        p.terms, p._hash = terms, None
        return p

    @classmethod
    def constant(cls, c):
        c = to_qq(c)
        return cls._raw({(): c} if c else {})

    @classmethod
    def variable(cls, var, c=ONE):
        return cls._raw({((var, 1),): to_qq(c)})

    @classmethod
    def coordinate(cls, i):
        return cls.variable(coordinate_var(i))

    @classmethod
    def symbol(cls, name, alpha=()):
        return cls.variable(jet_var(name, alpha))

    @classmethod
    def parameter(cls, name):
        return cls.variable(parameter_var(name))

    # Basic protocol

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, DiffPoly):
            try:
                other = DiffPoly.constant(other)
            except Exception:
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __len__(self):
        return len(self.terms)

    def items(self):
        return sorted(self.terms.items(), key=lambda item: (sum(e for _, e in item[0]), item[0]))

    def variables(self):
        out = set()
        for mono in self.terms:
            out.update(var for var, _ in mono)
        return out

    def constant_value(self):
        """The rational value if this polynomial is constant, else None."""
        if not self.terms:
            return ZERO
        if len(self.terms) == 1 and () in self.terms:
            return self.terms[()]
        return None

    # Arithmetic

    @staticmethod
    def _coerce(other):
        return other if isinstance(other, DiffPoly) else DiffPoly.constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            value = out.get(mono, ZERO) + c
            if value:
                out[mono] = value
            else:
                out.pop(mono, None)
        return DiffPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return DiffPoly._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c):
        c = to_qq(c)
        if not c:
            return DiffPoly()
        return DiffPoly._raw({m: c * v for m, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, DiffPoly):
            return self.scale(other)
        if len(other.terms) > len(self.terms):
            self, other = other, self
        out = {}
        for m2, c2 in other.terms.items():
            for m1, c1 in self.terms.items():
                mono = _mono_mul(m1, m2)
                value = out.get(mono, ZERO) + c1 * c2
                if value:
                    out[mono] = value
                else:
                    out.pop(mono, None)
        return DiffPoly._raw(out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, e: int):
        assert isinstance(e, int) and e >= 0, 'Only non-negative integer powers, got {!r}'.format(e)
        out = DiffPoly.constant(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # Calculus

    def total_derivative(self, k: int):
        """D_k: differentiates coordinates and jets along x^k; parameters are constants."""
        out = {}
        for mono, c in self.terms.items():
            for idx, (var, e) in enumerate(mono):
                dvar, is_one = _var_derivative(var, k)
                if dvar is None and not is_one:
                    continue
                rest = list(mono)
                if e == 1:
                    del rest[idx]
                else:
                    rest[idx] = (var, e - 1)
                rest = tuple(rest)
                if dvar is not None:
                    rest = _mono_mul(rest, ((dvar, 1),))
                value = out.get(rest, ZERO) + c * e
                if value:
                    out[rest] = value
                else:
                    out.pop(rest, None)
        return DiffPoly._raw(out)

    def derivative(self, alpha):
        out = self
        for k in sorted(alpha):
            if not out:
                break
            out = out.total_derivative(k)
        return out

    def partial(self, var):
        """Partial derivative with respect to one variable, all others independent."""
        out = {}
        for mono, c in self.terms.items():
            powers = dict(mono)
            e = powers.get(var)
            if not e:
                continue
            if e == 1:
                del powers[var]
            else:
                powers[var] = e - 1
            key = tuple(sorted(powers.items()))
            out[key] = out.get(key, ZERO) + c * e
        return DiffPoly(out)

    def substitute(self, functions=None, parameters=None, complete=False, cache=None):
        """
        functions: name -> DiffPoly bound to that function symbol; its jets become
        total derivatives of the bound expression. parameters: name -> DiffPoly.
        With complete=True every function symbol must be bound.
        """
        functions = functions or {}
        parameters = parameters or {}
        cache = {} if cache is None else cache

        def value_of(var):
            if var in cache:
                return cache[var]
            kind, name, alpha = var
            result = None
            if kind == 'f' and name in functions:
                result = functions[name].derivative(alpha)
            elif kind == 'p' and name in parameters:
                result = parameters[name]
            elif kind == 'f' and complete:
                raise UnboundSymbolError('Function symbol {!r} is not bound'.format(name))
            cache[var] = result
            return result

        out = DiffPoly()
        for mono, c in self.terms.items():
            term = DiffPoly.constant(c)
            kept = []
            for var, e in mono:
                bound = value_of(var)
                if bound is None:
                    kept.append((var, e))
                else:
                    term = term * (bound ** e)
                    if not term:
                        break
            if term and kept:
                term = term * DiffPoly._raw({tuple(kept): ONE})
            out = out + term
        return out

    def split_parameters(self):
        """Groups terms by their non-parameter monomial; returns monomial -> DiffPoly in
        the parameters only."""
        groups = {}
        for mono, c in self.terms.items():
            params = tuple((var, e) for var, e in mono if var[0] == 'p')
            rest = tuple((var, e) for var, e in mono if var[0] != 'p')
            groups.setdefault(rest, {})[params] = c
        return {rest: DiffPoly(terms) for rest, terms in groups.items()}

    def degree_in(self, kind, name=None):
        """Set of total degrees in the variables of one kind (optionally one symbol)."""
        degrees = set()
        for mono in self.terms:
            degrees.add(sum(e for (k, n, _), e in mono if k == kind and (name is None or n == name)))
        return degrees

    def derivative_order(self):
        """Set of total jet orders over the monomials."""
        return {sum(len(var[2]) * e for var, e in mono if var[0] == 'f') for mono in self.terms}

    # Printing

    def __str__(self):
        if not self.terms:
            return '0'
        chunks = []
        for mono, c in self.items():
            factors = [format_var(var) + ('^{}'.format(e) if e > 1 else '') for var, e in mono]
            negative = c < 0
            magnitude = -c if negative else c
            if not factors:
                body = format_qq(magnitude)
            elif magnitude == 1:
                body = '*'.join(factors)
            else:
                body = '*'.join([format_qq(magnitude)] + factors)
            if not chunks:
                chunks.append('-' + body if negative else body)
            else:
                chunks.append(('- ' if negative else '+ ') + body)
        return ' '.join(chunks)

    def __repr__(self):
        return 'DiffPoly({})'.format(self)
