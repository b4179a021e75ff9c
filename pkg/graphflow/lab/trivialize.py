"""
Search for a vector field X with [[P, X]] = Q among polynomial vector fields of
degree <= D. The search is over a finite ansatz: no solution at degree D says
nothing about higher degrees.
"""

from itertools import combinations_with_replacement
from typing import NamedTuple

from graphflow.constants.limits import MAX_TRIVIALIZE_DEGREE, MAX_ANSATZ_UNKNOWNS
from graphflow.core import linalg
from graphflow.exceptions import ResourceGuardError, DegreeError
from graphflow.logger.base import get_logger
from graphflow.supergeom.diffpoly import DiffPoly
from graphflow.supergeom.schouten import schouten
from graphflow.supergeom.superpoly import SuperPoly, vector_field, require_degree

log = get_logger('Trivialize')


class Trivialization(NamedTuple):
    X: SuperPoly
    gauge: list
    degree: int
    unknowns: int

    def format(self):
        lines = ['degree: {}'.format(self.degree), 'X:', str(self.X), 'gauge dimension: {}'.format(len(self.gauge))]
        for k, G in enumerate(self.gauge):
            lines.append('gauge {}:'.format(k))
            lines.append(str(G))
        return '\n'.join(lines)


def monomial(r, powers):
    out = DiffPoly.constant(1)
    for i in powers:
        out = out * DiffPoly.coordinate(i)
    return out


def vector_field_basis(r: int, degree: int) -> list:
    """x^beta xi_i for |beta| <= degree, ordered by (degree, beta, i)."""
    basis = []
    for d in range(degree + 1):
        for powers in combinations_with_replacement(range(1, r + 1), d):
            m = monomial(r, powers)
            for i in range(1, r + 1):
                basis.append(vector_field(r, {i: m}))
    return basis


def _assemble(basis, coefficients):
    X = SuperPoly.zero(basis[0].r)
    for j, c in sorted(coefficients.items()):
        X = X + basis[j].scale(c)
    return X


def trivialize(model, Q: SuperPoly, degree: int):
    """
    Returns a Trivialization (X of minimal coefficient norm, basis of the
    homogeneous solutions) or None when the ansatz of this degree has no solution.
    """
    P = model.P
    require_degree(Q, 2, 'flow value')
    P._check(Q)
    if degree < 0:
        raise DegreeError('Ansatz degree must be non-negative')
    if degree > MAX_TRIVIALIZE_DEGREE:
        raise ResourceGuardError('trivialization degree', degree, MAX_TRIVIALIZE_DEGREE)

    basis = vector_field_basis(P.r, degree)
    if len(basis) > MAX_ANSATZ_UNKNOWNS:
        raise ResourceGuardError('ansatz unknowns', len(basis), MAX_ANSATZ_UNKNOWNS)

    columns = [schouten(P, X).flat() for X in basis]
    solution, consistent = linalg.solve(columns, Q.flat())
    if not consistent:
        log.info('No trivializing field of degree <= {} for {}'.format(degree, model.name))
        return None

    kernel = linalg.nullspace(columns)
    coefficients = linalg.least_norm(solution, kernel, len(basis))
    X = _assemble(basis, coefficients)
    assert (Q - schouten(P, X)).is_zero(), 'Trivializing field leaves a residual'

    gauge = [_assemble(basis, w) for w in kernel]
    log.info('Trivialized at degree {}: {} unknowns, gauge dimension {}'.format(degree, len(basis), len(gauge)))
    return Trivialization(X, gauge, degree, len(basis))


def sweep(model, Q: SuperPoly, degrees) -> list:
    """(degree, Trivialization or None) for each degree."""
    return [(d, trivialize(model, Q, d)) for d in degrees]
