"""
Lifting a flow on Nambu bivectors to an evolution of the data (a, rho).

The map (a, rho) -> P_{a,rho} is linear in each argument, so a velocity
(A, R) moves P by

    dP = P_{A,rho} + P_{a,R}.

We look for differential polynomials A, R in the jets of abstract a and rho with
dP = Q(P_{a,rho}). The ansatz is homogeneous: for a flow with n vertices and E
edges, Q has degree n in both a and rho and total jet order n + E, which fixes
the degrees and orders of the monomials allowed in A and R.
"""

from itertools import combinations_with_replacement
from typing import NamedTuple

from graphflow.constants.limits import MAX_ANSATZ_UNKNOWNS
from graphflow.core import linalg
from graphflow.core.numbers import ONE
from graphflow.exceptions import ResourceGuardError
from graphflow.lab.flows import get_flow
from graphflow.lab.models import abstract_nambu, nambu_components
from graphflow.logger.base import get_logger
from graphflow.supergeom.diffpoly import DiffPoly, jet_var

log = get_logger('NambuLift')

A_NAME, RHO_NAME = 'a', 'rho'


class LiftReport(NamedTuple):
    solvable: bool
    A: DiffPoly
    R: DiffPoly
    unknowns: int
    kernel_dimension: int

    def format(self):
        return '\n'.join([
            'solvable: {}'.format('true' if self.solvable else 'false'),
            'unknowns: {}'.format(self.unknowns),
            'kernel dimension: {}'.format(self.kernel_dimension),
            'A: {}'.format(self.A),
            'R: {}'.format(self.R),
        ])


def _jets(order, r=3):
    out = []
    for k in range(order + 1):
        out.extend(combinations_with_replacement(range(1, r + 1), k))
    return out


def jet_monomials(counts: dict, order: int, max_order=None) -> list:
    """Products of jets with counts[name] factors of each symbol and total jet order
    exactly `order`. A jet of a single factor is bounded by max_order."""
    bound = order if max_order is None else min(order, max_order)
    factors = []
    for name in sorted(counts):
        options = []
        for chosen in combinations_with_replacement(_jets(bound), counts[name]):
            options.append([(name, alpha) for alpha in chosen])
        factors.append(options)

    out = []

    def walk(i, acc, used):
        if i == len(factors):
            if used == order:
                mono = DiffPoly.constant(1)
                for name, alpha in acc:
                    mono = mono * DiffPoly.variable(jet_var(name, alpha), ONE)
                out.append(mono)
            return
        for option in factors[i]:
            weight = sum(len(alpha) for _, alpha in option)
            if used + weight <= order:
                walk(i + 1, acc + option, used + weight)

    walk(0, [], 0)
    return out


def nambu_lift_conditions(flow, max_order=None, data_dir=None) -> LiftReport:
    flow = get_flow(flow, data_dir)
    model = abstract_nambu(A_NAME, RHO_NAME)
    a, rho = model.datum
    Q = flow(model.P)
    if Q.is_zero():
        return LiftReport(True, DiffPoly(), DiffPoly(), 0, 0)

    n, E = flow.arity, flow.edges
    order = n + E - 1
    R_basis = jet_monomials({RHO_NAME: n, A_NAME: n - 1}, order, max_order)
    A_basis = jet_monomials({RHO_NAME: n - 1, A_NAME: n}, order, max_order)
    unknowns = len(R_basis) + len(A_basis)
    if unknowns > MAX_ANSATZ_UNKNOWNS:
        raise ResourceGuardError('lift ansatz unknowns', unknowns, MAX_ANSATZ_UNKNOWNS)
    log.info('Lift ansatz for {}: {} R monomials, {} A monomials'.format(flow.name, len(R_basis), len(A_basis)))

    columns = [nambu_components(a, R).flat() for R in R_basis] + \
              [nambu_components(A, rho).flat() for A in A_basis]
    solution, consistent = linalg.solve(columns, Q.flat())
    kernel = linalg.nullspace(columns)
    if not consistent:
        return LiftReport(False, DiffPoly(), DiffPoly(), unknowns, len(kernel))

    R = DiffPoly()
    A = DiffPoly()
    for j, c in sorted(solution.items()):
        if j < len(R_basis):
            R = R + R_basis[j].scale(c)
        else:
            A = A + A_basis[j - len(R_basis)].scale(c)
    assert (nambu_components(a, R) + nambu_components(A, rho) - Q).is_zero(), 'Lift leaves a residual'
    return LiftReport(True, A, R, unknowns, len(kernel))
