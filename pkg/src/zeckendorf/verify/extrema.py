from ..closedform import S2, S3
from .check import Check
from .libs.oracle import ExtremumClass
from .libs.sweeper import SetCursor


class Extrema(Check):
    """ Extrema class (Check)

    Checks the shape of L over three consecutive integers:

        - L is never strictly monotone over n, n+1, n+2
        - n+1 is a divot exactly when n is in S2
        - n+1 is a peak exactly when n is in S3

    Args:
        n ('int'): the limit N, at least 3.

    Examples:
        report = Extrema(n=10**5).run()
        report.tallies['peak'], report.tallies['divot']

    """

    window = 2
    min_limit = 3

    def _prepare(self, low, high, report):
        return SetCursor(S2, low), SetCursor(S3, low)

    def _visit(self, n, frames, context, report):
        divots, peaks = context
        before, at, after = (frames[0].length, frames[1].length,
                             frames[2].length)

        if before < at < after or before > at > after:
            report.record(n, 'no monotone triple', (before, at, after),
                          'monotone')

        shape = ExtremumClass.from_lengths(before, at, after)
        report.tallies[shape.value] += 1

        if (shape is ExtremumClass.DIVOT) != divots.hit(n):
            report.record(n, 'divot' if divots.hit(n) else 'no divot',
                          shape.value, 'S2')
        if (shape is ExtremumClass.PEAK) != peaks.hit(n):
            report.record(n, 'peak' if peaks.hit(n) else 'no peak',
                          shape.value, 'S3')
