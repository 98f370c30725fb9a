'''
Module:
    zeckendorf.verify

Description:
    Brute-force checks of every characterization of L(n) over [1, N]. Each
    check is a class in its own module (table1.py holds Table1, ...); the
    functions below are thin wrappers returning the SweepReport.
'''

import importlib
import logging

from ..exceptions import UnknownCheck
from .check import Check
from .libs.report import SweepReport, Mismatch
from .libs.oracle import ExtremumClass, classify_extremum

logger = logging.getLogger(__name__)

CHECKS = ('table1', 'partition', 'extrema', 'bound', 'density', 'zk',
          'zpair', 'roundtrip', 'uniqueness', 'successor', 'lemmas', 'kernel')


def load_check(name):
    ''' Returns the check class registered under name.

    Follows the module naming convention: module `name`, class `Name`.

    Args:
        name ('str'): check name.

    Returns:
        type: the Check subclass.

    '''
    if name not in CHECKS:
        raise UnknownCheck('Unknown check "{n}", expected one of: {c}'
                           .format(n=name, c=', '.join(CHECKS)))
    module = importlib.import_module('{p}.{n}'.format(p=__name__, n=name))
    return getattr(module, name.title())


def run_check(name, n, **kwargs):
    return load_check(name)(n=n, **kwargs).run()


def run_all(n, **kwargs):
    ''' Runs every check up to n. A check whose range does not cover n is
        skipped and its report carries the reason in `skipped`.

    Returns:
        list: the reports, in CHECKS order.

    '''
    return [load_check(name)(n=n, **kwargs).run_or_skip() for name in CHECKS]


def sweep_counts(n, **kwargs):
    ''' Counts n' <= n by the sign of f(n'). '''
    return run_check('table1', n, **kwargs)


def check_partition(n, **kwargs):
    return run_check('partition', n, **kwargs)


def check_extrema(n, **kwargs):
    return run_check('extrema', n, **kwargs)


def check_bound(n, **kwargs):
    return run_check('bound', n, **kwargs)


def check_density(n, **kwargs):
    return run_check('density', n, **kwargs)


def density_gap(n, **kwargs):
    ''' Gaps between observed and limiting densities of rising, falling and
        flat steps among n' <= n.

    Returns:
        tuple: three Fractions (up, down, flat).

    '''
    return check_density(n, **kwargs).details['gaps']


def check_zk(n, **kwargs):
    return run_check('zk', n, **kwargs)


def check_zpair(n, **kwargs):
    return run_check('zpair', n, **kwargs)


def check_roundtrip(n, **kwargs):
    return run_check('roundtrip', n, **kwargs)


def check_uniqueness(n, **kwargs):
    return run_check('uniqueness', n, **kwargs)


def check_successor(n, **kwargs):
    return run_check('successor', n, **kwargs)


def check_lemmas(n, **kwargs):
    return run_check('lemmas', n, **kwargs)


def check_kernel(n, **kwargs):
    return run_check('kernel', n, **kwargs)
