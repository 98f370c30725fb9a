import sys
import logging
import argparse
from fractions import Fraction

from ..config import MAX_VALUE
from ..core import decompose, step, summand_count, StepClass
from ..closedform import SetId, containing_sets, elements
from ..exceptions import UsageError
from ..verify import CHECKS, load_check, classify_extremum
from .output import render, serializable

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


def _integer(text, low, high):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            'invalid integer: {t!r}'.format(t=text))
    if not low <= value <= high:
        raise argparse.ArgumentTypeError(
            '{v} outside supported range [{lo}, {hi}]'.format(
                v=value, lo=low, hi=high))
    return value


def non_negative_int(text):
    return _integer(text, 0, MAX_VALUE)


def positive_int(text):
    return _integer(text, 1, MAX_VALUE)


def fraction(text):
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(
            'invalid decimal: {t!r}'.format(t=text))
    if value < 0:
        raise argparse.ArgumentTypeError('tolerance must be non-negative')
    return value


class BaseCommand(object):
    '''
    Base of every subcommand. Subclasses declare their flags in
    `configure_parser` and build their output in `_generate`, which returns
    (rows, fields, document, plain-lines callable).
    '''

    name = None
    help = None

    def __init__(self, args):
        self.args = args
        self.exit_code = EXIT_OK

    @classmethod
    def configure_parser(cls, parser):
        raise NotImplementedError(
            "Derived class must implement `configure_parser` method.")

    def _generate(self):
        raise NotImplementedError(
            "Derived class must implement `_generate` method.")

    def run(self, stream):
        rows, fields, document, plain = self._generate()
        stream.write(render(self.args.format, rows, fields, document, plain,
                            header=not self.args.no_header))
        return self.exit_code


class DecomposeCommand(BaseCommand):
    '''
    Prints the Zeckendorf partition of n: indices, Fibonacci values and L(n).
    '''

    name = 'decompose'
    help = 'Zeckendorf partition of n'

    @classmethod
    def configure_parser(cls, parser):
        parser.add_argument('n', type=non_negative_int,
                            help='non-negative integer to decompose')

    def _generate(self):
        n = self.args.n
        rep = decompose(n)
        record = {
            'n': n,
            'indices': list(rep.indices),
            'values': list(rep.values()),
            'L': len(rep),
        }

        def plain():
            if not rep.indices:
                return ['{n} = (empty partition)  L = 0'.format(n=n)]
            return ['{n} = {values}  [{indices}]  L = {L}'.format(
                n=n,
                values=' + '.join(str(v) for v in record['values']),
                indices=' '.join('F{k}'.format(k=k) for k in rep.indices),
                L=record['L'])]

        return [record], ['n', 'indices', 'values', 'L'], record, plain


class ClassifyCommand(BaseCommand):
    '''
    Prints f(n), its sign class, the shape of L at n+1 and which of S1, S2,
    S3 contain n.
    '''

    name = 'classify'
    help = 'step, extremum and set membership of n'

    @classmethod
    def configure_parser(cls, parser):
        parser.add_argument('n', type=positive_int,
                            help='positive integer to classify')

    def _generate(self):
        n = self.args.n
        if n > MAX_VALUE - 2:
            raise UsageError('n must leave room for n+2 below {m}'
                             .format(m=MAX_VALUE))
        f = step(n)
        record = {
            'n': n,
            'L': summand_count(n),
            'f': f,
            'step_class': StepClass.from_step(f).value,
            'extremum': classify_extremum(n + 1).value,
            'at': n + 1,
            'sets': [str(s) for s in containing_sets(n)],
        }

        def plain():
            if record['extremum'] == 'neither':
                shape = 'no extremum at {m}'.format(m=n + 1)
            else:
                shape = '{m} is a {e}'.format(m=n + 1, e=record['extremum'])
            return ['n = {n}: L = {L}, f(n) = {f} ({c}); {shape}; '
                    'sets: {sets}'.format(
                        n=n, L=record['L'], f=f, c=record['step_class'],
                        shape=shape,
                        sets=' '.join(record['sets']) or 'none')]

        fields = ['n', 'L', 'f', 'step_class', 'extremum', 'at', 'sets']
        return [record], fields, record, plain


class SetsCommand(BaseCommand):
    '''
    Lists the elements of S1, S2, S3, Z(k) or Z(k, k+2), either up to a
    limit or the first few.
    '''

    name = 'sets'
    help = 'elements of a closed-form set'

    @classmethod
    def configure_parser(cls, parser):
        parser.add_argument('set_id', metavar='set-id',
                            choices=['s1', 's2', 's3', 'zk', 'zpair'],
                            help='s1 | s2 | s3 | zk | zpair')
        parser.add_argument('--k', type=int, default=None,
                            help='Fibonacci index for zk and zpair')
        grp = parser.add_mutually_exclusive_group(required=True)
        grp.add_argument('--limit', type=non_negative_int,
                         help='largest element to list')
        grp.add_argument('--count', type=non_negative_int,
                         help='number of elements to list')

    def _generate(self):
        set_id = SetId.parse(self.args.set_id, self.args.k)
        values = elements(set_id, limit=self.args.limit,
                          count=self.args.count)
        document = {
            'set': str(set_id),
            'k': set_id.k,
            'elements': values,
        }
        rows = [{'set': str(set_id), 'position': position, 'element': value}
                for position, value in enumerate(values, 1)]

        def plain():
            return [' '.join(str(v) for v in values)]

        return rows, ['set', 'position', 'element'], document, plain


class VerifyCommand(BaseCommand):
    '''
    Runs verification sweeps over [1, N] and exits 1 when any check
    reports a mismatch.
    '''

    name = 'verify'
    help = 'run verification sweeps'

    @classmethod
    def configure_parser(cls, parser):
        parser.add_argument('check', choices=CHECKS + ('all',),
                            help='check to run, or all')
        parser.add_argument('--n', type=positive_int, required=True,
                            help='sweep limit N')
        parser.add_argument('--tolerance', type=fraction, default=None,
                            help='largest accepted density gap')
        parser.add_argument('--workers', type=positive_int, default=None,
                            help='threads sharing each sweep')
        parser.add_argument('--audit', action='store_true', default=None,
                            help='cross-check the walker with decompose')
        parser.add_argument('--k-max', dest='k_max', type=int, default=None,
                            help='largest k for the zk and zpair checks')

    @staticmethod
    def _progress(check, n, high):
        sys.stderr.write('\r{c}: {n}/{h}'.format(c=check, n=n, h=high))
        sys.stderr.flush()

    def _generate(self):
        names = CHECKS if self.args.check == 'all' else (self.args.check,)
        kwargs = {
            'tolerance': self.args.tolerance,
            'workers': self.args.workers,
            'audit': self.args.audit,
            'k_max': self.args.k_max,
        }
        if sys.stderr.isatty():
            kwargs['progress'] = self._progress

        reports = []
        for name in names:
            check = load_check(name)(n=self.args.n, **kwargs)
            # a single check fails on its own range, "all" skips it
            if self.args.check == 'all':
                reports.append(check.run_or_skip())
            else:
                reports.append(check.run())
            if 'progress' in kwargs:
                sys.stderr.write('\n')

        if not all(report.passed for report in reports):
            self.exit_code = EXIT_MISMATCH

        documents = [report.as_dict() for report in reports]
        rows = []
        for document in documents:
            row = dict(document)
            row['mismatches'] = '; '.join(
                '{n}: expected {expected}, got {actual} ({reason})'
                .format(**m) for m in document['mismatches'])
            rows.append(row)
        fields = ['check', 'n', 'count_up', 'count_down', 'count_flat',
                  'density_up', 'density_down', 'density_flat',
                  'mismatch_total', 'passed', 'skipped', 'mismatches']

        def plain():
            lines = []
            for report in reports:
                if report.skipped:
                    lines.append('{c}: N = {n}  SKIPPED ({r})'.format(
                        c=report.check, n=report.limit, r=report.skipped))
                    continue
                lines.append('{c}: N = {n}  up = {u}  down = {d}  flat = {f}'
                             '  {status}'.format(
                                 c=report.check, n=report.limit,
                                 u=report.count_up, d=report.count_down,
                                 f=report.count_flat,
                                 status='PASS' if report.passed else 'FAIL'))
                for key, value in report.details.items():
                    lines.append('  {k}: {v}'.format(
                        k=key, v=serializable(value)))
                if not report.passed:
                    lines.append('  mismatches: {t}'.format(
                        t=report.mismatch_total))
                    for m in report.mismatches:
                        lines.append('    n = {m.n}: expected {m.expected}, '
                                     'got {m.actual} ({m.reason})'
                                     .format(m=m))
            return lines

        return rows, fields, documents, plain


COMMANDS = (DecomposeCommand, ClassifyCommand, SetsCommand, VerifyCommand)
