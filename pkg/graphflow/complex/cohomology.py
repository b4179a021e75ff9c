"""
Kernel and image of the differential on enumerated bases of small bigradings.
These are hooks for experiments; no dimension formula is asserted here.
"""

from typing import NamedTuple

from graphflow.constants.limits import MAX_COHOMOLOGY_VERTICES
from graphflow.core import linalg
from graphflow.complex.enumeration import enumerate_graphs
from graphflow.complex.insertion import differential
from graphflow.exceptions import ResourceGuardError
from graphflow.graphs.graph_sum import GraphSum
from graphflow.logger.base import get_logger

log = get_logger('Cohomology')


class CohomologyReport(NamedTuple):
    bigrading: tuple
    basis_size: int
    cocycle_dimension: int
    coboundary_dimension: int

    def format(self):
        return 'bigrading=({}, {})\tgraphs={}\tcocycles={}\tcoboundaries={}'.format(
            self.bigrading[0], self.bigrading[1], self.basis_size, self.cocycle_dimension, self.coboundary_dimension)


def _basis(n, E):
    if n > MAX_COHOMOLOGY_VERTICES:
        raise ResourceGuardError('vertex count', n, MAX_COHOMOLOGY_VERTICES)
    if n < 1 or E < 0:
        return []
    return enumerate_graphs(n, E, strategy='growth')


def differential_columns(n: int, E: int):
    """Basis of the (n, E) cell and the images d(g) as sparse columns keyed by graph."""
    basis = _basis(n, E)
    columns = []
    for g in basis:
        image = differential(GraphSum.of(g))
        columns.append({h.sort_key(): c for h, c in image.items()})
    return basis, columns


def cocycle_basis(n: int, E: int) -> list:
    basis, columns = differential_columns(n, E)
    out = []
    for vector in linalg.nullspace(columns):
        out.append(GraphSum([(basis[j], c) for j, c in sorted(vector.items())]))
    return out


def coboundary_rank(n: int, E: int) -> int:
    """Dimension of d applied to the (n - 1, E - 1) cell."""
    if n - 1 < 1 or E - 1 < 0:
        return 0
    _, columns = differential_columns(n - 1, E - 1)
    return linalg.rank(columns)


def coboundary_basis(n: int, E: int) -> list:
    """Linearly independent images d(g) of basis graphs g of the (n - 1, E - 1) cell."""
    if n - 1 < 1 or E - 1 < 0:
        return []
    basis, columns = differential_columns(n - 1, E - 1)
    kept, out = [], []
    for g, column in zip(basis, columns):
        if column and linalg.rank(kept + [column]) > len(kept):
            kept.append(column)
            out.append(differential(GraphSum.of(g)))
    return out


def cohomology_report(n: int, E: int) -> CohomologyReport:
    basis, columns = differential_columns(n, E)
    kernel = len(linalg.nullspace(columns)) if basis else 0
    report = CohomologyReport((n, E), len(basis), kernel, coboundary_rank(n, E))
    log.info(report.format())
    return report
