"""
Cocycle library. The tetrahedron is built in; further cocycles ship as GraphSum
files listed in a manifest.json of the data directory and are checked with
is_cocycle when loaded.
"""

import json
import os
from typing import NamedTuple, Tuple

from graphflow.constants.conf import resolve_data_dir
from graphflow.complex.insertion import is_cocycle
from graphflow.exceptions import CocycleValidationError, InputException, FormatError
from graphflow.graphs.graph import complete_graph
from graphflow.graphs.graph_sum import GraphSum, read_graph_sum
from graphflow.logger.base import get_logger

log = get_logger('CocycleLibrary')

MANIFEST = 'manifest.json'


class CocycleRecord(NamedTuple):
    name: str
    sum: GraphSum
    bigrading: Tuple[int, int]
    provenance: str = ''


def validate(record: CocycleRecord) -> CocycleRecord:
    for g in record.sum.graphs():
        if g.bigrading != tuple(record.bigrading):
            raise CocycleValidationError('{}: term {} has bigrading {}, manifest says {}'
                                         .format(record.name, g.encode(), g.bigrading, record.bigrading))
    if not is_cocycle(record.sum):
        raise CocycleValidationError('{} is not annihilated by the differential'.format(record.name))
    return record


GAMMA3 = CocycleRecord(
    name='gamma3',
    sum=GraphSum.of(complete_graph(4)),
    bigrading=(4, 6),
    provenance='Kontsevich tetrahedral cocycle, built in',
)

BUILTIN = {GAMMA3.name: GAMMA3}


def load_library(data_dir=None, check=True) -> dict:
    data_dir = resolve_data_dir(data_dir)
    path = os.path.join(data_dir, MANIFEST)
    records = dict(BUILTIN)
    if not os.path.exists(path):
        log.debug('No cocycle manifest at {}'.format(path))
        return records

    with open(path) as f:
        try:
            manifest = json.load(f)
        except ValueError as e:
            raise FormatError('Malformed manifest {}: {}'.format(path, e))

    for entry in manifest.get('cocycles', []):
        try:
            name, filename, bigrading = entry['name'], entry['file'], tuple(entry['bigrading'])
        except KeyError as e:
            raise FormatError('Manifest entry {} misses field {}'.format(entry, e))
        record = CocycleRecord(name, read_graph_sum(os.path.join(data_dir, filename)), bigrading,
                               entry.get('provenance', ''))
        records[name] = validate(record) if check else record
        log.info('Loaded cocycle {} with {} graphs'.format(name, len(record.sum)))

    return records


def load_cocycle_file(path) -> CocycleRecord:
    s = read_graph_sum(path)
    grading = s.bigrading
    if grading is None:
        raise CocycleValidationError('{} is not homogeneous'.format(path))
    return validate(CocycleRecord(os.path.basename(path), s, grading, path))


def get_cocycle(name_or_path, data_dir=None) -> CocycleRecord:
    if os.path.isfile(name_or_path):
        return load_cocycle_file(name_or_path)
    if name_or_path in BUILTIN:
        return BUILTIN[name_or_path]
    records = load_library(data_dir)
    if name_or_path not in records:
        raise InputException('Unknown cocycle {!r}; known: {}'.format(name_or_path, ', '.join(sorted(records))))
    return records[name_or_path]
