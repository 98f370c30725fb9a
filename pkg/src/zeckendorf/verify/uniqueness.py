from ..config import cfg
from ..core import DEFAULT_TABLE, decompose, check_value
from ..exceptions import RangeError
from .check import Check
from .libs.oracle import enumerate_partitions


class Uniqueness(Check):
    """ Uniqueness class (Check)

    Enumerates every index subset of 2..max_index without neighbours and
    checks that each n <= N is the sum of exactly one of them, namely the
    greedy decomposition.

    When max_index is not given it is the index of the largest Fibonacci
    number <= N, the smallest enumeration that reaches every n <= N.

    Args:
        n ('int'): the limit N, below F_{max_index+1}.
        max_index ('int') default=None: largest index in the enumeration.

    Examples:
        Uniqueness(n=10**5).run().passed
        Uniqueness(n=100, max_index=12).run().details['max_index']  # 12

    """

    def _init_arguments(self):
        return {
            'required': ['n'],
            'optional': {
                'max_index': cfg.get('uniqueness.max_index'),
            }
        }

    @property
    def index_limit(self):
        if self._max_index is None:
            return DEFAULT_TABLE.largest_index_at_most(max(self._n, 1))
        return self._max_index

    def skip_reason(self):
        reason = super().skip_reason()
        if reason is None and self._max_index is not None \
                and 2 <= self._max_index < DEFAULT_TABLE.max_index \
                and DEFAULT_TABLE[self._max_index + 1] <= self._n:
            reason = 'needs N < F_{k} = {f} for max_index {m}'.format(
                k=self._max_index + 1, f=DEFAULT_TABLE[self._max_index + 1],
                m=self._max_index)
        return reason

    def _validate(self):
        super()._validate()
        check_value(self.index_limit, name='max_index', low=2,
                    high=DEFAULT_TABLE.max_index - 1)
        if DEFAULT_TABLE[self.index_limit + 1] <= self._n:
            raise RangeError(
                'Indices up to {m} cannot express every n <= {n}'
                .format(m=self.index_limit, n=self._n))

    def _prepare(self, low, high, report):
        return enumerate_partitions(low, high, self.index_limit)

    def _visit(self, n, frames, context, report):
        found = context.get(n, [])
        expected = [decompose(n).indices]
        if found != expected:
            report.record(n, [list(i) for i in expected],
                          [list(i) for i in found], 'uniqueness')

    def _finalize(self, report):
        report.details['max_index'] = self.index_limit
