"""
Exact sparse linear algebra over QQ on top of sympy's SDM matrices.

Systems are given column-wise: each column is a dict row_key -> coefficient,
the right hand side is a dict row_key -> coefficient. Row keys may be any
sortable objects; they are numbered in sorted order so results do not depend
on insertion order.
"""

from sympy import QQ
from sympy.polys.matrices.sdm import SDM

from graphflow.logger.base import get_logger

log = get_logger('LinAlg')


def _row_index(columns, rhs=None):
    keys = set()
    for column in columns:
        keys.update(column.keys())
    if rhs:
        keys.update(rhs.keys())
    return {key: i for i, key in enumerate(sorted(keys))}


def _matrix(columns, index, rhs=None):
    ncols = len(columns) + (1 if rhs is not None else 0)
    rows = {}
    for j, column in enumerate(columns):
        for key, value in column.items():
            if value:
                rows.setdefault(index[key], {})[j] = QQ(value)
    if rhs is not None:
        for key, value in rhs.items():
            if value:
                rows.setdefault(index[key], {})[len(columns)] = QQ(value)
    return SDM(rows, (len(index), ncols), QQ)


def _particular(rref, pivots, ncols):
    solution = {}
    for i, p in enumerate(pivots):
        if p < ncols:
            value = rref.get(i, {}).get(ncols)
            if value:
                solution[p] = value
    return solution


def solve(columns: list, rhs: dict):
    """
    Solves sum_j x_j * columns[j] = rhs exactly. Returns (x, consistent) where x is
    a dict column -> value with free variables set to zero. When the system is
    inconsistent, x is the least squares solution of the normal equations.
    """
    ncols = len(columns)
    if ncols == 0:
        return {}, not any(rhs.values())

    index = _row_index(columns, rhs)
    augmented = _matrix(columns, index, rhs)
    rref, pivots = augmented.rref()
    if ncols not in pivots:
        return _particular(rref, pivots, ncols), True

    log.debug('Inconsistent {}x{} system, falling back to least squares'.format(len(index), ncols))
    A = _matrix(columns, index)
    b = _matrix([], index, rhs)
    At = A.transpose()
    normal = At.matmul(A).hstack(At.matmul(b))
    rref, pivots = normal.rref()
    return _particular(rref, pivots, ncols), False


def nullspace(columns: list) -> list:
    """Basis of {x : sum_j x_j * columns[j] = 0} as a list of dicts column -> value."""
    if not columns:
        return []
    index = _row_index(columns)
    if not index:
        return [{j: QQ(1)} for j in range(len(columns))]
    basis, _ = _matrix(columns, index).nullspace()
    return [dict(basis[i]) for i in sorted(basis.keys())]


def rank(columns: list) -> int:
    if not columns:
        return 0
    index = _row_index(columns)
    if not index:
        return 0
    _, pivots = _matrix(columns, index).rref()
    return len(pivots)


def combine(columns: list, coefficients: dict) -> dict:
    out = {}
    for j, c in coefficients.items():
        for key, value in columns[j].items():
            out[key] = out.get(key, QQ(0)) + c * value
    return {k: v for k, v in out.items() if v}


def least_norm(solution: dict, kernel: list, ncols: int) -> dict:
    """Projects a particular solution onto the orthogonal complement of the kernel,
    giving the unique solution of minimal Euclidean norm."""
    if not kernel:
        return solution
    # Gram system: (K K^T) lam = K x
    gram_columns = []
    for u in kernel:
        gram_columns.append({i: sum((u.get(j, QQ(0)) * w.get(j, QQ(0)) for j in range(ncols)), QQ(0))
                             for i, w in enumerate(kernel)})
    rhs = {i: sum((w.get(j, QQ(0)) * solution.get(j, QQ(0)) for j in range(ncols)), QQ(0))
           for i, w in enumerate(kernel)}
    lam, consistent = solve(gram_columns, rhs)
    assert consistent, 'Gram system of a kernel basis must be solvable'

    out = dict(solution)
    for i, w in enumerate(kernel):
        c = lam.get(i)
        if not c:
            continue
        for j, value in w.items():
            out[j] = out.get(j, QQ(0)) - c * value
    return {j: v for j, v in out.items() if v}
