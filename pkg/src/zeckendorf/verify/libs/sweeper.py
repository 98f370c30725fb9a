import logging
import functools
from collections import namedtuple
from concurrent.futures import ThreadPoolExecutor

from ...core import decompose, carry_increment
from ...closedform import iter_elements
from ...exceptions import SweepAuditError
from .report import SweepReport

log = logging.getLogger(__name__)

# indices holds the full ascending tuple, or only the two smallest
Snapshot = namedtuple('Snapshot', ['value', 'length', 'indices'])


class Walker(object):
    '''Walks consecutive integers, advancing one representation with the
    carry rules instead of decomposing every integer afresh.

    With an audit interval, every that many steps the walker re-decomposes
    its current value and raises SweepAuditError on disagreement.
    '''

    def __init__(self, start, audit_interval=None):
        self.value = start
        # descending, smallest index last
        self._descending = list(reversed(decompose(start).indices))
        self._audit_interval = audit_interval
        self._steps = 0

    @property
    def length(self):
        return len(self._descending)

    @property
    def indices(self):
        return tuple(reversed(self._descending))

    def advance(self):
        carry_increment(self._descending)
        self.value += 1
        self._steps += 1
        if self._audit_interval and self._steps % self._audit_interval == 0:
            self.audit()

    def audit(self):
        expected = decompose(self.value).indices
        if self.indices != expected:
            raise SweepAuditError(
                'Walker holds {got} at {n}, decomposition gives {exp}'
                .format(got=list(self.indices), n=self.value,
                        exp=list(expected)))
        log.debug('     Audit passed at {n}'.format(n=self.value))

    def snapshot(self, full=False):
        descending = self._descending
        if full:
            indices = tuple(reversed(descending))
        else:
            indices = tuple(descending[:-3:-1])
        return Snapshot(self.value, len(descending), indices)


class SetCursor(object):
    '''Follows an increasing closed-form set alongside a sweep so membership
    of consecutive integers costs one generator call per element.
    '''

    def __init__(self, set_id, start):
        self._elements = iter_elements(set_id, start)
        self.head = next(self._elements)

    def hit(self, n):
        ''' Membership of n; calls must come with non-decreasing n. '''
        while self.head < n:
            self.head = next(self._elements)
        return self.head == n


def plan(low, high, workers):
    ''' Splits [low, high] into at most `workers` contiguous chunks.

    Returns:
        list: (low, high) pairs covering the range in order.

    '''
    size = high - low + 1
    workers = max(1, min(workers, size))
    chunks = []
    start = low
    for part in range(workers):
        end = start + size // workers + (1 if part < size % workers else 0) - 1
        chunks.append((start, end))
        start = end + 1
    return chunks


def sweep(check, low, high, workers=1):
    '''Runs a check over [low, high], split across a ThreadPoolExecutor when
    more than one worker is asked for, and merges the chunk reports.

    Args:
        check ('Check'): the check; its `_sweep_range` handles one chunk.
        low ('int'): first n.
        high ('int'): last n.
        workers ('int'): max number of threads to spawn.

    Returns:
        SweepReport: the merged report.
    '''
    chunks = plan(low, high, workers)
    log.debug('     Sweeping {check} over {n} chunk(s): {chunks}'
              .format(check=check.name, n=len(chunks), chunks=chunks))

    if len(chunks) == 1:
        reports = [check._sweep_range(*chunks[0])]
    else:
        with ThreadPoolExecutor(max_workers=len(chunks)) as executor:
            futures = [executor.submit(check._sweep_range, chunk_low,
                                       chunk_high)
                       for chunk_low, chunk_high in chunks]
            reports = [future.result() for future in futures]

    return functools.reduce(SweepReport.merge, reports)
