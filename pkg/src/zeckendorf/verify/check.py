import logging
from collections import deque

from ..config import cfg, MAX_VALUE
from ..core import check_value
from ..exceptions import ZeckendorfError
from .libs import sweeper
from .libs.report import SweepReport

logger = logging.getLogger(__name__)


class Check(object):
    """ Check class

    The base verification check. Every check sweeps n over [1, N], walking
    the Zeckendorf representation with the carry rules, and compares a
    claimed characterization against the first-principles truth.

    Override `_visit` to inspect each n. The sweep hands it a window of
    snapshots for n, n+1, ..., n+window, each holding the value, L and the
    indices (the two smallest, or all of them when `full_indices` is set).
    `_prepare` and `_finish` run once per chunk, `_finalize` once on the
    merged report. To add arguments, override `_init_arguments` to return a
    dictionary of required or optional arguments.

    Every check accepts these optional arguments:
        workers ('int'): threads sharing the sweep, default from config.
        audit ('bool'): cross-check the walker against decompose.
        audit_interval ('int'): steps between audits.
        mismatch_cap ('int'): mismatches kept in the report.
        progress ('callable'): called as progress(check, n, high).

    Examples:
        # Example of a check that L never exceeds 40 below 10**6
        class Short(Check):
            def _visit(self, n, frames, context, report):
                if frames[0].length > 40:
                    report.record(n, '<= 40', frames[0].length)

        report = Short(n=10**6).run()
        report.passed

    """

    # snapshots needed past n
    window = 1
    full_indices = False
    # smallest N the check accepts
    min_limit = 1
    progress_every = 2 ** 16

    def __init__(self, **kwargs):
        """ Instantiates the check with appropriate arguments.

        """
        arguments = self._init_arguments()
        common = {
            'workers': cfg.get('sweep.workers'),
            'audit': cfg.get('sweep.audit'),
            'audit_interval': cfg.get('sweep.audit_interval'),
            'mismatch_cap': cfg.get('report.mismatch_cap'),
            'progress': None,
        }

        for arg in arguments.get('required', []):
            if kwargs.get(arg) is None:
                required = '\n'.join(arguments['required'])
                raise ZeckendorfError(
                    "The following arguments are required for this check:"
                    "\n" + required + "\n\nCheck Help:\n"
                    + (self.__doc__ or ''))
            setattr(self, '_' + arg, kwargs[arg])

        optional = dict(common)
        optional.update(arguments.get('optional', {}))
        for arg, default in optional.items():
            value = kwargs.get(arg)
            setattr(self, '_' + arg, default if value is None else value)

    @property
    def name(self):
        return type(self).__name__.lower()

    def _init_arguments(self):
        """ Defines the arguments added to the instance. Derived classes
            return a dict with at most two keys, "required" (list of names)
            and "optional" (dict of name to default). Each argument becomes
            an attribute with a leading underscore.

            return {
                "required": ["n"],
                "optional": {
                    "k_max": 15
                }
            }

        Returns:
            dict: The arguments for the check.

        """
        return {'required': ['n']}

    def _validate(self):
        check_value(self._n, name='N', low=self.min_limit,
                    high=MAX_VALUE - self.window - 1)
        check_value(self._workers, name='workers', low=1, high=1024)

    def skip_reason(self):
        """ Why this check cannot sweep up to N, or None when it can.

        Returns:
            str: the reason, or None.

        """
        high = MAX_VALUE - self.window - 1
        if not self.min_limit <= self._n <= high:
            return 'needs {lo} <= N <= {hi}'.format(lo=self.min_limit,
                                                       hi=high)
        return None

    def run_or_skip(self):
        """ Runs the check, or returns a skipped report when N lies outside
            its range.

        """
        reason = self.skip_reason()
        if reason is None:
            return self.run()
        logger.warning('{c}: skipped, {r}'.format(c=self.name, r=reason))
        report = self._new_report()
        report.skipped = reason
        return report

    def run(self):
        """ Runs the check over [1, N].

        Returns:
            SweepReport: The merged report.

        """
        self._validate()
        logger.debug('Running check {c} up to {n}'.format(c=self.name,
                                                          n=self._n))
        report = sweeper.sweep(self, 1, self._n, workers=self._workers)
        self._finalize(report)
        self.log_result(report)
        return report

    def _new_report(self):
        return SweepReport(check=self.name, limit=self._n,
                           cap=self._mismatch_cap)

    def _sweep_range(self, low, high):
        """ Sweeps one chunk [low, high] and returns its report.

        """
        report = self._new_report()
        context = self._prepare(low, high, report)
        walker = sweeper.Walker(
            low, self._audit_interval if self._audit else None)

        frames = deque(maxlen=self.window + 1)
        frames.append(walker.snapshot(self.full_indices))
        for _ in range(self.window):
            walker.advance()
            frames.append(walker.snapshot(self.full_indices))

        for n in range(low, high + 1):
            if n > low:
                walker.advance()
                frames.append(walker.snapshot(self.full_indices))
            report.tally(frames[1].length - frames[0].length)
            self._visit(n, frames, context, report)
            if self._progress and (n - low) % self.progress_every == 0:
                self._progress(self.name, n, high)

        self._finish(low, high, context, report)
        return report

    def _prepare(self, low, high, report):
        """ Builds the per-chunk context handed to `_visit`.

        """
        return None

    def _visit(self, n, frames, context, report):
        """ Inspects one n. frames[i] is the snapshot of n + i.

        """
        pass

    def _finish(self, low, high, context, report):
        pass

    def _finalize(self, report):
        """ Runs once on the merged report.

        """
        pass

    def log_result(self, report):
        """ Logs the outcome of the check.

        """
        if report.passed:
            logger.info('{c}: passed up to {n}'.format(c=self.name,
                                                       n=report.limit))
            return

        logger.error('{c}: {t} mismatch(es) up to {n}'.format(
            c=self.name, t=report.mismatch_total, n=report.limit))
        for mismatch in report.mismatches[:10]:
            logger.error('  n={m.n} expected {m.expected}, got {m.actual} '
                         '{m.reason}'.format(m=mismatch))
