import logging
from fractions import Fraction
from collections import Counter, namedtuple
from dataclasses import dataclass, field

from ...core import StepClass

logger = logging.getLogger(__name__)

Mismatch = namedtuple('Mismatch', ['n', 'expected', 'actual', 'reason'])


@dataclass
class SweepReport(object):
    """ SweepReport class

    Outcome of one check over n in [1, limit]: step counts, exact densities
    and the discrepancies found.

    Reports for disjoint subranges merge associatively with `merge`, so the
    final report does not depend on how the range was split. Mismatches are
    kept sorted by n and capped; `mismatch_total` keeps the full count.
    `details` is filled once, after merging.
    A check whose range does not cover the limit yields a report with
    `skipped` holding the reason and nothing counted.
    """

    check: str
    limit: int
    count_up: int = 0
    count_down: int = 0
    count_flat: int = 0
    mismatches: list = field(default_factory=list)
    mismatch_total: int = 0
    cap: int = 100
    tallies: Counter = field(default_factory=Counter)
    details: dict = field(default_factory=dict)
    skipped: str = None

    def tally(self, f):
        ''' Counts one n by the sign of f(n). '''
        if f > 0:
            self.count_up += 1
        elif f < 0:
            self.count_down += 1
        else:
            self.count_flat += 1

    def record(self, n, expected, actual, reason=''):
        ''' Records one discrepancy at n. '''
        self.mismatch_total += 1
        self.mismatches.append(Mismatch(n, expected, actual, reason))
        self._trim()

    def _trim(self):
        self.mismatches.sort(key=lambda mismatch: mismatch.n)
        del self.mismatches[self.cap:]

    @property
    def counted(self):
        return self.count_up + self.count_down + self.count_flat

    def count(self, step_class):
        return {
            StepClass.UP: self.count_up,
            StepClass.DOWN: self.count_down,
            StepClass.FLAT: self.count_flat,
        }[step_class]

    def _density(self, count):
        return Fraction(count, self.limit)

    @property
    def density_up(self):
        return self._density(self.count_up)

    @property
    def density_down(self):
        return self._density(self.count_down)

    @property
    def density_flat(self):
        return self._density(self.count_flat)

    @property
    def passed(self):
        return self.mismatch_total == 0

    def merge(self, other):
        ''' Combines the reports of two disjoint subranges.

        Args:
            other ('SweepReport'): report of the other subrange.

        Returns:
            SweepReport: the combined report.

        '''
        if other.check != self.check:
            raise ValueError('Cannot merge reports of {a} and {b}'
                             .format(a=self.check, b=other.check))
        merged = SweepReport(
            check=self.check,
            limit=self.limit,
            count_up=self.count_up + other.count_up,
            count_down=self.count_down + other.count_down,
            count_flat=self.count_flat + other.count_flat,
            mismatches=self.mismatches + other.mismatches,
            mismatch_total=self.mismatch_total + other.mismatch_total,
            cap=self.cap,
            tallies=Counter(self.tallies),
            details=dict(self.details),
            skipped=self.skipped or other.skipped)
        merged.tallies.update(other.tallies)
        merged.details.update(other.details)
        merged._trim()
        return merged

    def as_dict(self):
        ''' Schema-stable summary of the report. '''
        return {
            'check': self.check,
            'n': self.limit,
            'count_up': self.count_up,
            'count_down': self.count_down,
            'count_flat': self.count_flat,
            'density_up': self.density_up,
            'density_down': self.density_down,
            'density_flat': self.density_flat,
            'mismatch_total': self.mismatch_total,
            'passed': self.passed,
            'skipped': self.skipped,
            'mismatches': [dict(m._asdict()) for m in self.mismatches],
            'details': self.details,
        }
