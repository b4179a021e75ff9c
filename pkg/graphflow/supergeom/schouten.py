"""
Schouten bracket realized as the odd Poisson bracket on (x, xi):

    [[A, B]] = sum_i  (d^R A / d xi_i)(d B / d x^i)  -  (d A / d x^i)(d^L B / d xi_i)

With this sign choice [[X, Y]] is the commutator of vector fields, and

    [[A, B]] = -(-1)^((a-1)(b-1)) [[B, A]]
    [[A, B C]] = [[A, B]] C + (-1)^((a-1) b) B [[A, C]]
    [[A, [[B, C]]]] = [[[[A, B]], C]] + (-1)^((a-1)(b-1)) [[B, [[A, C]]]]
"""

from sympy import QQ

from graphflow.exceptions import DegreeError
from graphflow.supergeom.diffpoly import DiffPoly
from graphflow.supergeom.superpoly import SuperPoly, require_degree, vector_field


def schouten(A: SuperPoly, B: SuperPoly) -> SuperPoly:
    A._check(B)
    out = SuperPoly.zero(A.r)
    for i in range(1, A.r + 1):
        right = A.right_derivative(i)
        if right:
            dB = B.x_derivative(i)
            if dB:
                out = out + right.wedge(dB)
        left = B.left_derivative(i)
        if left:
            dA = A.x_derivative(i)
            if dA:
                out = out - dA.wedge(left)
    return out


def jacobiator(P: SuperPoly) -> SuperPoly:
    require_degree(P, 2, 'bivector')
    return schouten(P, P).scale(QQ(1, 2))


def poisson_differential(P: SuperPoly, A: SuperPoly) -> SuperPoly:
    require_degree(P, 2, 'bivector')
    return schouten(P, A)


def hamiltonian_field(P: SuperPoly, h: DiffPoly) -> SuperPoly:
    return poisson_differential(P, SuperPoly.scalar(P.r, h))


def poisson_bracket(P: SuperPoly, f: DiffPoly, g: DiffPoly) -> DiffPoly:
    """{f, g} = [[ [[P, g]], f ]] = P^ij df/dx^i dg/dx^j, so {x^i, x^j} = P^ij."""
    value = schouten(hamiltonian_field(P, g), SuperPoly.scalar(P.r, f))
    if value.is_zero():
        return DiffPoly()
    if value.degrees() != {0}:
        raise DegreeError('Bracket of two functions must be a function')
    return value.terms[()]


def is_casimir(P: SuperPoly, f: DiffPoly) -> bool:
    return hamiltonian_field(P, f).is_zero()


def euler_field(r: int) -> SuperPoly:
    return vector_field(r, {i: DiffPoly.coordinate(i) for i in range(1, r + 1)})


def proportionality_factor(A: SuperPoly, B: SuperPoly):
    """The rational c with A = c B, or None. None as well when B is zero."""
    if B.is_zero():
        return None
    xi, coefficient = B.items()[0]
    mono, value = coefficient.items()[0]
    numerator = A.terms.get(xi, DiffPoly()).terms.get(mono)
    if numerator is None:
        return QQ(0) if A.is_zero() else None
    c = numerator / value
    if A == B.scale(c):
        return c
    return None
