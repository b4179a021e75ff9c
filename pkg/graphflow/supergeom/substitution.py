from graphflow.exceptions import DimensionMismatchError
from graphflow.supergeom.diffpoly import DiffPoly
from graphflow.supergeom.superpoly import SuperPoly, abstract_components, component_name


def substitute(A, bindings: dict, parameters=None, complete=False):
    """Replaces function symbols (and their jets) by bound coordinate expressions.
    Works on DiffPoly and SuperPoly alike."""
    bindings = {name: _as_poly(value) for name, value in bindings.items()}
    parameters = {name: _as_poly(value) for name, value in (parameters or {}).items()}
    return A.substitute(bindings, parameters, complete)


def _as_poly(value):
    return value if isinstance(value, DiffPoly) else DiffPoly.constant(value)


def bivector_bindings(P: SuperPoly, prefix='P') -> dict:
    """Bindings sending the abstract components P12, P13, ... to the coefficients of P."""
    return {component_name(prefix, i, j): P.coefficient((i, j))
            for i in range(1, P.r + 1) for j in range(i + 1, P.r + 1)}


def instantiate(A: SuperPoly, P: SuperPoly, prefix='P') -> SuperPoly:
    """Evaluates a universal expression in the abstract bivector at a concrete P."""
    if A.r != P.r:
        raise DimensionMismatchError('Expression lives in dimension {}, bivector in {}'.format(A.r, P.r))
    names = set(abstract_components(P.r, prefix))
    bindings = {name: value for name, value in bivector_bindings(P, prefix).items() if name in names}
    return A.substitute(bindings)
