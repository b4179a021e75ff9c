"""
Parameters of a model family for which a flow vanishes: every coefficient of
Q(P), split by its x- and jet-monomial, is a polynomial in the parameters, and
the conditions are a lexicographic Groebner basis of these polynomials.
"""

from typing import NamedTuple

import sympy

from graphflow.exceptions import ModelError
from graphflow.lab.flows import apply_symmetry
from graphflow.logger.base import get_logger
from graphflow.supergeom.diffpoly import DiffPoly

log = get_logger('Invariance')


class InvarianceReport(NamedTuple):
    parameters: tuple
    conditions: list

    @property
    def identically_invariant(self):
        return not self.conditions

    @property
    def inconsistent(self):
        return self.conditions == [sympy.Integer(1)]

    def format(self):
        if not self.conditions:
            return 'conditions: none (identically invariant)'
        return '\n'.join(['conditions:'] + ['  {} = 0'.format(c) for c in self.conditions])


def to_sympy(p: DiffPoly, symbols: dict):
    """Converts a DiffPoly in the parameters only to a sympy expression."""
    out = sympy.Integer(0)
    for mono, c in p.items():
        term = sympy.QQ.to_sympy(c)
        for (kind, name, _), e in mono:
            if kind != 'p':
                raise ModelError('Coefficient {} still depends on {}'.format(p, name))
            term *= symbols[name] ** e
        out += term
    return out


def invariance_conditions(model, flow) -> InvarianceReport:
    Q = apply_symmetry(model, flow)
    symbols = {name: sympy.Symbol(name) for name in model.params}

    equations = set()
    for _, coefficient in Q.items():
        for _, condition in coefficient.split_parameters().items():
            expr = sympy.expand(to_sympy(condition, symbols))
            if expr != 0:
                equations.add(expr)

    if not equations:
        return InvarianceReport(model.params, [])
    if not symbols:
        return InvarianceReport(model.params, [sympy.Integer(1)])

    gens = [symbols[name] for name in model.params]
    basis = sympy.groebner(sorted(equations, key=sympy.default_sort_key), *gens, order='lex', domain=sympy.QQ)
    conditions = [sympy.factor(expr) for expr in basis.exprs]
    log.info('{} parameter conditions for {} under {}'.format(len(conditions), model.name, getattr(flow, 'name', flow)))
    return InvarianceReport(model.params, conditions)


def satisfies(report: InvarianceReport, point: dict) -> bool:
    """Whether a parameter point (name -> rational) lies in the zero set."""
    subs = {sympy.Symbol(name): sympy.Rational(str(value)) for name, value in point.items()}
    return all(sympy.simplify(c.subs(subs)) == 0 for c in report.conditions)
