from ..core import step, StepClass
from .check import Check

# published counts of n <= N with f(n) > 0, f(n) < 0, f(n) = 0
TABLE1 = {
    10: (3, 2, 5),
    10 ** 2: (38, 23, 39),
    10 ** 3: (382, 236, 382),
    10 ** 4: (3819, 2360, 3820),
    10 ** 5: (38196, 23606, 38197),
    10 ** 6: (381966, 236068, 381966),
}

# published rows that sum to N - 1: they count [1, N - 1], and N itself is a
# falling step in both cases
ERRATA = frozenset([10 ** 4, 10 ** 5])

# counts over [1, N], every row summing to N
COUNTS = {
    10: (3, 2, 5),
    10 ** 2: (38, 23, 39),
    10 ** 3: (382, 236, 382),
    10 ** 4: (3819, 2361, 3820),
    10 ** 5: (38196, 23607, 38197),
    10 ** 6: (381966, 236068, 381966),
}

_CLASSES = (StepClass.UP, StepClass.DOWN, StepClass.FLAT)


def counts_before(checkpoint, counts):
    ''' Counts over [1, checkpoint - 1] from those over [1, checkpoint].

    Args:
        checkpoint ('int'): the last n counted.
        counts ('tuple'): (up, down, flat) over [1, checkpoint].

    Returns:
        tuple: (up, down, flat) without the checkpoint itself.

    '''
    last = StepClass.from_step(step(checkpoint))
    return tuple(count - (cls is last)
                 for count, cls in zip(counts, _CLASSES))


class Table1(Check):
    """ Table1 class (Check)

    Counts n <= N by the sign of f(n) = L(n+1) - L(n), computed from the
    summand counts alone, and records the running counts at every power of
    ten up to N.

    Every checkpoint must equal COUNTS exactly. Checkpoints that appear in
    the published table must also match it: the rows listed in ERRATA count
    [1, N - 1] and are compared on that convention, the others on [1, N].

    Args:
        n ('int'): the limit N.

    CLI Argument   |  Class Argument
    ---------------------------------
    --n=value      |  n=value

    Examples:
        report = Table1(n=10**6).run()
        (report.count_up, report.count_down, report.count_flat)
        report.details['checkpoints'][1000]     # (382, 236, 382)
        report.details['errata']                # [10000, 100000]

    """

    def _checkpoints(self):
        checkpoint = 10
        while checkpoint <= self._n:
            yield checkpoint
            checkpoint *= 10

    def _prepare(self, low, high, report):
        return {c for c in self._checkpoints() if low <= c <= high}

    def _visit(self, n, frames, context, report):
        if n in context:
            self._tally_checkpoint(n, report)

    def _finish(self, low, high, context, report):
        # this chunk lies wholly below the later checkpoints
        for checkpoint in self._checkpoints():
            if checkpoint > high:
                self._tally_checkpoint(checkpoint, report)

    def _tally_checkpoint(self, checkpoint, report):
        report.tallies[(checkpoint, 'up')] += report.count_up
        report.tallies[(checkpoint, 'down')] += report.count_down
        report.tallies[(checkpoint, 'flat')] += report.count_flat

    def _finalize(self, report):
        checkpoints = {}
        errata = []
        for checkpoint in self._checkpoints():
            counts = tuple(report.tallies[(checkpoint, name)]
                           for name in ('up', 'down', 'flat'))
            checkpoints[checkpoint] = counts

            expected = COUNTS.get(checkpoint)
            if expected is not None and counts != expected:
                report.record(checkpoint, expected, counts, 'counts')

            published = TABLE1.get(checkpoint)
            if published is None:
                continue
            if checkpoint in ERRATA:
                compared = counts_before(checkpoint, counts)
                errata.append(checkpoint)
            else:
                compared = counts
            if compared != published:
                report.record(checkpoint, published, compared, 'table1')

        report.details['checkpoints'] = checkpoints
        if errata:
            report.details['errata'] = errata
        if self._n in TABLE1:
            report.details['published'] = TABLE1[self._n]
