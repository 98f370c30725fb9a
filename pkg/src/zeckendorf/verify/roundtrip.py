from ..core import ZeckRep, decompose, recompose
from .check import Check


class Roundtrip(Check):
    """ Roundtrip class (Check)

    Checks recompose(decompose(n)) == n and the validity of every
    decomposition for n in [0, N].

    Args:
        n ('int'): the limit N.

    """

    def _roundtrip(self, n, report):
        rep = decompose(n)
        if not ZeckRep.is_valid(rep.indices):
            report.record(n, 'valid', list(rep.indices), 'invariants')
        value = recompose(rep)
        if value != n:
            report.record(n, n, value, 'roundtrip')

    def _prepare(self, low, high, report):
        if low == 1:
            self._roundtrip(0, report)

    def _visit(self, n, frames, context, report):
        self._roundtrip(n, report)
