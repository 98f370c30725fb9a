from ..core import DEFAULT_TABLE, deep_witness, step
from .check import Check


class Bound(Check):
    """ Bound class (Check)

    Checks that f(n) = 1 whenever f(n) > 0, and that the family
    n = F_{2k+1} - 1 reaches f(n) = 1 - k for every k with F_{2k+1} <= N,
    so every negative value down to the deepest witness is attained.

    Args:
        n ('int'): the limit N.

    Examples:
        report = Bound(n=13).run()
        report.details['witnesses']     # [(1, 1, 0), (2, 4, -1), (3, 12, -2)]

    """

    def _visit(self, n, frames, context, report):
        f = frames[1].length - frames[0].length
        if f > 1:
            report.record(n, 1, f, 'positive step')
        elif f < 0:
            report.tallies[f] += 1

    def _finalize(self, report):
        witnesses = []
        k = 1
        while 2 * k + 1 <= DEFAULT_TABLE.max_index \
                and DEFAULT_TABLE[2 * k + 1] <= self._n:
            n, drop = deep_witness(k)
            actual = step(n)
            if actual != drop:
                report.record(n, drop, actual, 'witness k={k}'.format(k=k))
            elif drop < 0 and not report.tallies[drop]:
                report.record(n, drop, None, 'not attained in sweep')
            witnesses.append((k, n, drop))
            k += 1
        report.details['witnesses'] = witnesses
        report.details['deepest'] = min(
            [key for key in report.tallies], default=0)
