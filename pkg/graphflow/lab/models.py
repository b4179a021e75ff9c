"""
Concrete Poisson models: Nambu brackets in R^3, linear (Lie-Poisson) brackets,
and the abstract bivectors used for universal computations. Models can also be
read from INI files:

    [model]
    name = rotated
    r = 3
    params = t
    P12 = t*x3
    P13 = -x2
    P23 = x1

or, for the Nambu class,

    [model]
    name = cubic
    kind = nambu
    a = (x1^3 + x2^3 + x3^3)/3
    rho = 1 + x1^2
"""

import configparser
import os
from typing import NamedTuple

from graphflow.cli.expression import parse_diffpoly
from graphflow.exceptions import ModelError, InputException, FormatError
from graphflow.logger.base import get_logger
from graphflow.supergeom.diffpoly import DiffPoly
from graphflow.supergeom.schouten import jacobiator, is_casimir
from graphflow.supergeom.superpoly import SuperPoly, bivector, abstract_bivector, require_degree

log = get_logger('Models')


class NambuDatum(NamedTuple):
    a: DiffPoly
    rho: DiffPoly


class PoissonModel:
    def __init__(self, name: str, P: SuperPoly, params=(), metadata=None, datum: NambuDatum = None):
        require_degree(P, 2, 'Poisson model bivector')
        self.name = name
        self.P = P
        self.params = tuple(params)
        self.metadata = dict(metadata or {})
        self.datum = datum
        self._residual = None

    @property
    def r(self):
        return self.P.r

    def jacobi_residual(self) -> SuperPoly:
        if self._residual is None:
            self._residual = jacobiator(self.P)
        return self._residual

    def is_poisson(self) -> bool:
        return self.jacobi_residual().is_zero()

    def with_parameters(self, values: dict):
        """Model with the given parameters fixed to the given values."""
        values = {name: v if isinstance(v, DiffPoly) else DiffPoly.constant(v) for name, v in values.items()}
        unknown = set(values) - set(self.params)
        if unknown:
            raise ModelError('{} has no parameters {}'.format(self.name, sorted(unknown)))
        datum = None
        if self.datum:
            datum = NambuDatum(self.datum.a.substitute(parameters=values), self.datum.rho.substitute(parameters=values))
        return PoissonModel(self.name, self.P.substitute(parameters=values),
                            [p for p in self.params if p not in values], self.metadata, datum)

    def describe(self) -> str:
        lines = ['model: {}'.format(self.name), 'r: {}'.format(self.r)]
        if self.params:
            lines.append('params: {}'.format(' '.join(self.params)))
        if self.datum:
            lines.append('a: {}'.format(self.datum.a))
            lines.append('rho: {}'.format(self.datum.rho))
        lines.append(str(self.P))
        return '\n'.join(lines)

    def __repr__(self):
        return 'PoissonModel({!r}, r={})'.format(self.name, self.r)


def nambu_components(a: DiffPoly, rho: DiffPoly) -> SuperPoly:
    """P^ij = rho * eps^ijk * da/dx^k in R^3."""
    da = {k: a.total_derivative(k) for k in (1, 2, 3)}
    return bivector(3, {(1, 2): rho * da[3], (2, 3): rho * da[1], (3, 1): rho * da[2]})


def nambu_bivector(datum: NambuDatum, name='nambu', params=()) -> PoissonModel:
    return PoissonModel(name, nambu_components(datum.a, datum.rho), params, {'kind': 'nambu'}, datum)


def linear_bracket(constants: dict, r=None, name='linear', params=()) -> PoissonModel:
    """constants: (i, j, k) -> c^ij_k, 1-based, antisymmetric in (i, j). Missing
    (j, i, k) entries are filled in antisymmetrically."""
    structure = {}
    for (i, j, k), c in constants.items():
        c = c if isinstance(c, DiffPoly) else DiffPoly.constant(c)
        if i == j:
            if c:
                raise ModelError('Structure constant c^{}{}_{} must vanish'.format(i, j, k))
            continue
        if (j, i, k) in constants:
            other = constants[(j, i, k)]
            other = other if isinstance(other, DiffPoly) else DiffPoly.constant(other)
            if c + other:
                raise ModelError('Structure constants are not antisymmetric in ({}, {}) for k={}'.format(i, j, k))
        structure[(i, j, k)] = c

    dimension = max([max(key) for key in structure] + [r or 0])
    if r is not None and dimension > r:
        raise ModelError('Structure constants index beyond dimension {}'.format(r))
    components = {}
    for (i, j, k), c in structure.items():
        if i < j:
            components[(i, j)] = components.get((i, j), DiffPoly()) + c * DiffPoly.coordinate(k)
        elif (j, i, k) not in structure:
            components[(j, i)] = components.get((j, i), DiffPoly()) - c * DiffPoly.coordinate(k)
    return PoissonModel(name, bivector(max(dimension, 1), components), params, {'kind': 'linear'})


def _so3():
    return linear_bracket({(1, 2, 3): 1, (2, 3, 1): 1, (3, 1, 2): 1}, 3, 'so3')


def _sl2():
    # x1 = h, x2 = e, x3 = f
    return linear_bracket({(1, 2, 2): 2, (1, 3, 3): -2, (2, 3, 1): 1}, 3, 'sl2')


def _heisenberg():
    return linear_bracket({(1, 2, 3): 1}, 3, 'heisenberg')


def _broken():
    model = linear_bracket({(1, 2, 3): 1, (2, 3, 2): 1}, 3, 'broken')
    model.metadata['poisson'] = False
    return model


def _abstract(r):
    def build():
        return PoissonModel('abstract{}'.format(r), abstract_bivector(r), (),
                            {'kind': 'abstract', 'poisson': r <= 2})
    return build


def _nambu_cubic():
    a = parse_diffpoly('(x1^3 + x2^3 + x3^3)/3', 3)
    rho = parse_diffpoly('1 + x1^2', 3)
    return nambu_bivector(NambuDatum(a, rho), 'nambu-cubic')


def _nambu_sphere():
    return nambu_bivector(NambuDatum(parse_diffpoly('(x1^2 + x2^2 + x3^2)/2', 3), DiffPoly.constant(1)), 'nambu-sphere')


BUILTIN_MODELS = {
    'so3': _so3,
    'sl2': _sl2,
    'heisenberg': _heisenberg,
    'broken': _broken,
    'abstract2': _abstract(2),
    'abstract3': _abstract(3),
    'nambu-sphere': _nambu_sphere,
    'nambu-cubic': _nambu_cubic,
}


def abstract_nambu(a='a', rho='rho') -> PoissonModel:
    return nambu_bivector(NambuDatum(DiffPoly.symbol(a), DiffPoly.symbol(rho)), 'nambu-abstract')


def load_model_file(path) -> PoissonModel:
    config = configparser.ConfigParser()
    try:
        config.read(path)
    except configparser.Error as e:
        raise FormatError('Malformed model file {}: {}'.format(path, e))
    if not config.has_section('model'):
        raise FormatError('Model file {} has no [model] section'.format(path))

    section = config['model']
    name = section.get('name', os.path.splitext(os.path.basename(path))[0])
    params = tuple(section.get('params', '').split())
    functions = tuple(section.get('functions', '').split())
    kind = section.get('kind', 'bivector')

    if kind == 'nambu':
        if 'a' not in section:
            raise FormatError('Nambu model {} needs an "a" entry'.format(name))
        a = parse_diffpoly(section['a'], 3, params, functions)
        rho = parse_diffpoly(section.get('rho', '1'), 3, params, functions)
        return nambu_bivector(NambuDatum(a, rho), name, params)

    try:
        r = section.getint('r')
    except ValueError:
        raise FormatError('Model {}: r must be an integer'.format(name))
    if not r or r < 2:
        raise FormatError('Model {} needs a dimension r >= 2'.format(name))

    components = {}
    for key in section:
        if not (key.lower().startswith('p') and key[1:].isdigit() and len(key) == 3):
            continue
        i, j = int(key[1]), int(key[2])
        if not (1 <= i <= r and 1 <= j <= r) or i == j:
            raise FormatError('Model {}: bad component {}'.format(name, key))
        components[(i, j)] = parse_diffpoly(section[key], r, params, functions)
    log.info('Loaded model {} from {}'.format(name, path))
    return PoissonModel(name, bivector(r, components), params, {'kind': 'file', 'path': path})


def get_model(name_or_path) -> PoissonModel:
    if name_or_path in BUILTIN_MODELS:
        return BUILTIN_MODELS[name_or_path]()
    if os.path.isfile(name_or_path):
        return load_model_file(name_or_path)
    raise InputException('Unknown model {!r}; builtins: {}'.format(name_or_path, ', '.join(sorted(BUILTIN_MODELS))))


def casimir_check(model: PoissonModel) -> bool:
    """For Nambu models: whether the parameter a is a Casimir of P."""
    if model.datum is None:
        raise ModelError('{} is not a Nambu model'.format(model.name))
    return is_casimir(model.P, model.datum.a)
