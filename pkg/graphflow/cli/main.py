"""
graphflow command line.

    graphflow [--threads N] [--data DIR] [--output FILE] [--verbose] <group> <command> ...

Reports go to stdout, logs to stderr. Exit codes: 0 success, 2 bad input,
3 resource guard hit, 4 no solution at the requested ansatz.
"""

import logging
import os

import click

from graphflow.constants.limits import EXIT_INPUT, EXIT_RESOURCE, EXIT_NO_SOLUTION, DEFAULT_PICARD_ORDER, \
    DEFAULT_LEIBNIZ_ROUNDS, DEFAULT_FACTORIZE_DIMENSION
from graphflow.core.numbers import parse_qq
from graphflow.core.workers import set_threads
from graphflow.exceptions import InputException, ResourceGuardError, NoSolution, FormatError
from graphflow.logger.base import get_logger, overwrite_logger_level

log = get_logger('CLI')


class GraphflowGroup(click.Group):
    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except InputException as e:
            click.echo('error: {}'.format(e), err=True)
            ctx.exit(EXIT_INPUT)
        except ResourceGuardError as e:
            click.echo('resource guard: {}'.format(e), err=True)
            ctx.exit(EXIT_RESOURCE)
        except NoSolution as e:
            click.echo('no solution: {}'.format(e), err=True)
            ctx.exit(EXIT_NO_SOLUTION)


def emit(ctx, text):
    """Prints a report and mirrors it to --output when given."""
    if not text.endswith('\n'):
        text += '\n'
    click.echo(text, nl=False)
    output = ctx.obj.get('output')
    if output:
        with open(output, 'w') as f:
            f.write(text)
        log.info('Wrote {}'.format(output))


def _read(path):
    try:
        with open(path) as f:
            return f.read()
    except OSError as e:
        raise InputException('Cannot read {}: {}'.format(path, e))


def _graph_sum(path_or_edges):
    from graphflow.graphs.graph import UnorientedGraph
    from graphflow.graphs.graph_sum import GraphSum
    if os.path.isfile(path_or_edges):
        return GraphSum.loads(_read(path_or_edges))
    return GraphSum.of(UnorientedGraph.from_edge_text(path_or_edges))


def _cocycle(ctx, name):
    from graphflow.complex.library import get_cocycle
    return get_cocycle(name, ctx.obj.get('data'))


def _flow(ctx, name):
    from graphflow.lab.flows import get_flow
    return get_flow(name, ctx.obj.get('data'))


def _model(name):
    from graphflow.lab.models import get_model
    return get_model(name)


@click.group(cls=GraphflowGroup)
@click.option('--threads', default=None, type=int, help='Worker threads for evaluation and insertion.')
@click.option('--data', default=None, type=click.Path(), help='Cocycle library directory.')
@click.option('--output', '-o', default=None, type=click.Path(), help='Also write the report to this file.')
@click.option('--verbose', '-v', count=True, help='Log INFO (-v) or DEBUG (-vv) to stderr.')
@click.pass_context
def cli(ctx, threads, data, output, verbose):
    ctx.ensure_object(dict)
    ctx.obj.update(data=data, output=output)
    if threads is not None:
        if threads < 1:
            raise InputException('--threads must be positive')
        set_threads(threads)
    if verbose:
        overwrite_logger_level(logging.DEBUG if verbose > 1 else logging.INFO)


# graph

@cli.group(name='graph', cls=GraphflowGroup)
def graph_group():
    """Canonical forms, statistics and enumeration of unoriented graphs."""


@graph_group.command(name='canon')
@click.option('--edges', default=None, help='Edge list "0 1;1 2;0 2".')
@click.argument('path', required=False)
@click.pass_context
def graph_canon(ctx, edges, path):
    from graphflow.graphs.graph import UnorientedGraph
    from graphflow.graphs.graph_sum import GraphSum
    if edges is None and path is None:
        raise InputException('Give --edges or a GraphSum file')
    if edges is not None:
        g = UnorientedGraph.from_edge_text(edges)
        canon, sign = g.canonical_form()
        emit(ctx, 'ZERO' if sign == 0 else '{}\t{}'.format(sign, canon.encode()))
        return
    s = GraphSum.loads(_read(path))
    emit(ctx, s.dumps() if not s.is_empty() else 'ZERO')


@graph_group.command(name='stats')
@click.argument('path')
@click.pass_context
def graph_stats_command(ctx, path):
    from graphflow.graphs.stats import graph_stats
    rows = graph_stats(_graph_sum(path))
    emit(ctx, '\n'.join(row.format() for row in rows) if rows else 'ZERO')


@graph_group.command(name='enumerate')
@click.argument('n', type=int)
@click.argument('e', type=int)
@click.option('--strategy', type=click.Choice(['bitmask', 'growth']), default='bitmask')
@click.option('--connected', is_flag=True)
@click.option('--min-valence', default=0, type=int)
@click.pass_context
def graph_enumerate(ctx, n, e, strategy, connected, min_valence):
    from graphflow.complex.enumeration import enumerate_graphs
    graphs = enumerate_graphs(n, e, strategy, connected, min_valence)
    lines = [g.encode() for g in graphs]
    emit(ctx, '\n'.join(['count: {}'.format(len(graphs))] + lines))


# gc

@cli.group(name='gc', cls=GraphflowGroup)
def gc_group():
    """The graph complex: differential, bracket, cocycles."""


def _sum_text(s):
    return s.dumps() if not s.is_empty() else '0'


@gc_group.command(name='d')
@click.argument('path')
@click.pass_context
def gc_d(ctx, path):
    from graphflow.complex.insertion import differential
    emit(ctx, _sum_text(differential(_graph_sum(path))))


@gc_group.command(name='bracket')
@click.argument('first')
@click.argument('second')
@click.pass_context
def gc_bracket(ctx, first, second):
    from graphflow.complex.insertion import lie_bracket
    emit(ctx, _sum_text(lie_bracket(_graph_sum(first), _graph_sum(second))))


@gc_group.command(name='cocycle-check')
@click.argument('path')
@click.pass_context
def gc_cocycle_check(ctx, path):
    from graphflow.complex.insertion import is_cocycle
    s = _graph_sum(path) if os.path.isfile(path) else _cocycle(ctx, path).sum
    emit(ctx, 'cocycle: {}'.format('true' if is_cocycle(s) else 'false'))


@gc_group.command(name='union')
@click.argument('first')
@click.argument('second')
@click.option('--power', default=1, type=int, help='Number of copies of SECOND.')
@click.pass_context
def gc_union(ctx, first, second, power):
    from graphflow.complex.insertion import cocycle_power
    if power < 0:
        raise InputException('--power must be non-negative')
    emit(ctx, _sum_text(cocycle_power(_graph_sum(first), _graph_sum(second), power)))


@gc_group.command(name='enumerate')
@click.argument('n', type=int)
@click.argument('e', type=int)
@click.pass_context
def gc_enumerate(ctx, n, e):
    """Nonzero graphs of the (n, e) cell, edge-by-edge growth."""
    from graphflow.complex.enumeration import enumerate_graphs
    graphs = enumerate_graphs(n, e, 'growth')
    emit(ctx, '\n'.join(['count: {}'.format(len(graphs))] + [g.encode() for g in graphs]))


@gc_group.command(name='cohomology')
@click.argument('n', type=int)
@click.argument('e', type=int)
@click.option('--cocycles', is_flag=True, help='Also print a cocycle basis.')
@click.pass_context
def gc_cohomology(ctx, n, e, cocycles):
    from graphflow.complex.cohomology import cohomology_report, cocycle_basis
    lines = [cohomology_report(n, e).format()]
    if cocycles:
        for k, s in enumerate(cocycle_basis(n, e)):
            lines.append('# cocycle {}'.format(k))
            lines.append(s.dumps().rstrip('\n'))
    emit(ctx, '\n'.join(lines))


# or

@cli.group(name='or', cls=GraphflowGroup)
def or_group():
    """Orientation morphism, Leibniz graphs and factorization."""


@or_group.command(name='eval')
@click.argument('path')
@click.option('--model', default='abstract2', help='Builtin model name or model file.')
@click.option('--jacobiator-at', default=None, type=int, help='Put [[P,P]] at this vertex.')
@click.pass_context
def or_eval(ctx, path, model, jacobiator_at):
    from graphflow.orient.evaluation import orient_flow, jacobiator_insertion
    s = _graph_sum(path)
    P = _model(model).P
    value = orient_flow(s, P) if jacobiator_at is None else jacobiator_insertion(s, P, jacobiator_at)
    emit(ctx, str(value))


@or_group.command(name='flow')
@click.argument('cocycle')
@click.option('--model', default='abstract2')
@click.pass_context
def or_flow(ctx, cocycle, model):
    flow = _flow(ctx, cocycle)
    emit(ctx, str(flow(_model(model).P)))


@or_group.command(name='factorize')
@click.argument('cocycle')
@click.option('--dimension', '-r', default=DEFAULT_FACTORIZE_DIMENSION, type=int)
@click.option('--rounds', default=DEFAULT_LEIBNIZ_ROUNDS, type=int)
@click.option('--no-hint', is_flag=True, help='Do not seed the ansatz from the cocycle.')
@click.option('--diamond', default=None, type=click.Path(), help='Write the Leibniz combination here.')
@click.pass_context
def or_factorize(ctx, cocycle, dimension, rounds, no_hint, diamond):
    from graphflow.orient.evaluation import symmetry_defect
    from graphflow.orient.factorization import leibniz_ansatz_iterate
    from graphflow.orient.leibniz import dumps_combination
    from graphflow.supergeom.superpoly import abstract_bivector
    record = _cocycle(ctx, cocycle)
    P = abstract_bivector(dimension)
    target = symmetry_defect(record.sum, P)
    result = leibniz_ansatz_iterate(target, P, rounds, hint=None if no_hint else record.sum)
    if diamond:
        with open(diamond, 'w') as f:
            f.write(dumps_combination(result.diamond))
    emit(ctx, result.report())
    if not result.solved:
        raise NoSolution('residual of {} terms left after {} rounds'.format(len(result.residual.term_keys()), rounds))


@or_group.command(name='metagraph')
@click.argument('paths', nargs=-1, required=True)
@click.pass_context
def or_metagraph(ctx, paths):
    from graphflow.orient.leibniz import loads_combination
    from graphflow.orient.metagraph import leibniz_metagraph
    emit(ctx, leibniz_metagraph([loads_combination(_read(p)) for p in paths]).format())


# lab

@cli.group(name='lab', cls=GraphflowGroup)
def lab_group():
    """Concrete Poisson models and the flows acting on them."""


def _model_report(model):
    residual = model.jacobi_residual()
    return '{}\njacobi: {}'.format(model.describe(), 'true' if residual.is_zero() else 'false')


@lab_group.command(name='models')
@click.pass_context
def lab_models(ctx):
    from graphflow.lab.models import BUILTIN_MODELS
    lines = []
    for name in sorted(BUILTIN_MODELS):
        model = BUILTIN_MODELS[name]()
        lines.append('{}\tr={}\t{}'.format(name, model.r, model.metadata.get('kind', '')))
    emit(ctx, '\n'.join(lines))


@lab_group.command(name='nambu')
@click.option('--a', 'a_text', required=True, help='Expression for a in x1, x2, x3.')
@click.option('--rho', 'rho_text', default='1', help='Expression for the density.')
@click.option('--params', default='', help='Space separated parameter names.')
@click.option('--functions', default='', help='Space separated abstract function symbols.')
@click.pass_context
def lab_nambu(ctx, a_text, rho_text, params, functions):
    from graphflow.cli.expression import parse_diffpoly
    from graphflow.lab.models import NambuDatum, nambu_bivector
    params, functions = tuple(params.split()), tuple(functions.split())
    datum = NambuDatum(parse_diffpoly(a_text, 3, params, functions), parse_diffpoly(rho_text, 3, params, functions))
    emit(ctx, _model_report(nambu_bivector(datum, params=params)))


def _parse_constant(text):
    try:
        left, value = text.split('=')
        i, j, k = (int(t) for t in left.replace(',', ' ').split())
    except ValueError:
        raise FormatError('Structure constants are written "i,j,k=value", got {!r}'.format(text))
    return (i, j, k), parse_qq(value)


@lab_group.command(name='linear')
@click.option('--c', 'constants', multiple=True, help='Structure constant "i,j,k=value" (c^ij_k).')
@click.option('--dimension', '-r', default=None, type=int)
@click.pass_context
def lab_linear(ctx, constants, dimension):
    from graphflow.lab.models import linear_bracket
    emit(ctx, _model_report(linear_bracket(dict(_parse_constant(c) for c in constants), dimension)))


@lab_group.command(name='apply')
@click.option('--model', required=True)
@click.option('--cocycle', required=True, help='Cocycle name or file, or "scaling".')
@click.pass_context
def lab_apply(ctx, model, cocycle):
    from graphflow.lab.flows import apply_symmetry
    emit(ctx, str(apply_symmetry(_model(model), _flow(ctx, cocycle))))


@lab_group.command(name='integrate')
@click.option('--model', required=True)
@click.option('--cocycle', required=True)
@click.option('--order', default=DEFAULT_PICARD_ORDER, type=int)
@click.pass_context
def lab_integrate(ctx, model, cocycle, order):
    from graphflow.lab.flows import picard_integrate
    lines = []
    for m, P in enumerate(picard_integrate(_model(model), _flow(ctx, cocycle), order)):
        lines.append('# order {}'.format(m))
        lines.append(str(P))
    emit(ctx, '\n'.join(lines))


@lab_group.command(name='invariance')
@click.option('--model', required=True, help='Model file declaring params.')
@click.option('--cocycle', required=True)
@click.pass_context
def lab_invariance(ctx, model, cocycle):
    from graphflow.lab.invariance import invariance_conditions
    emit(ctx, invariance_conditions(_model(model), _flow(ctx, cocycle)).format())


@lab_group.command(name='trivialize')
@click.option('--model', required=True)
@click.option('--cocycle', required=True)
@click.option('--degree', default=1, type=int, help='Largest ansatz degree; all degrees up to it are tried.')
@click.pass_context
def lab_trivialize(ctx, model, cocycle, degree):
    from graphflow.lab.flows import apply_symmetry
    from graphflow.lab.trivialize import trivialize
    model = _model(model)
    Q = apply_symmetry(model, _flow(ctx, cocycle))
    lines = []
    for d in range(degree + 1):
        found = trivialize(model, Q, d)
        if found is not None:
            lines.append(found.format())
            emit(ctx, '\n'.join(lines))
            return
        lines.append('degree {}: not found'.format(d))
    emit(ctx, '\n'.join(lines))
    raise NoSolution('no trivializing vector field of degree <= {}'.format(degree))


@lab_group.command(name='lift')
@click.option('--cocycle', required=True)
@click.option('--max-order', default=None, type=int, help='Bound on the jet order of a single factor.')
@click.pass_context
def lab_lift(ctx, cocycle, max_order):
    from graphflow.lab.lift import nambu_lift_conditions
    report = nambu_lift_conditions(_flow(ctx, cocycle), max_order)
    emit(ctx, report.format())
    if not report.solvable:
        raise NoSolution('no lift within the ansatz')


def main():
    cli(obj={})


if __name__ == '__main__':
    main()
