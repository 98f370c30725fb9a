from ..core import ZeckRep, decompose, successor
from .check import Check


class Successor(Check):
    """ Successor class (Check)

    Checks successor(decompose(n)) == decompose(n+1) for n in [0, N], the
    successor working on indices alone.

    Args:
        n ('int'): the limit N.

    """

    def _compare(self, n, current, following, report):
        result = successor(current)
        if result != following or not ZeckRep.is_valid(result.indices):
            report.record(n, list(following.indices), list(result.indices),
                          'successor')

    def _prepare(self, low, high, report):
        context = {'next': decompose(low)}
        if low == 1:
            self._compare(0, decompose(0), context['next'], report)
        return context

    def _visit(self, n, frames, context, report):
        current = context['next']
        following = decompose(n + 1)
        self._compare(n, current, following, report)
        context['next'] = following
