from ..core import StepClass
from ..closedform import S1, S2
from .check import Check
from .libs.sweeper import SetCursor


class Partition(Check):
    """ Partition class (Check)

    Checks that S1 holds exactly the n with L(n) < L(n+1), that S2 holds
    exactly the n with L(n) > L(n+1), and that no n is in both.

    Membership comes from the closed forms, followed with a cursor over
    each increasing set; the truth side comes from the summand counts.

    Args:
        n ('int'): the limit N.

    Examples:
        Partition(n=10**4).run().passed

    """

    def _prepare(self, low, high, report):
        return SetCursor(S1, low), SetCursor(S2, low)

    def _visit(self, n, frames, context, report):
        rising, falling = context
        in_s1 = rising.hit(n)
        in_s2 = falling.hit(n)
        if in_s1 and in_s2:
            report.record(n, 'at most one of S1, S2', 'both', 'disjoint')
            return

        if in_s1:
            claimed = StepClass.UP
        elif in_s2:
            claimed = StepClass.DOWN
        else:
            claimed = StepClass.FLAT

        actual = StepClass.from_step(frames[1].length - frames[0].length)
        if claimed is not actual:
            report.record(n, claimed.value, actual.value, 'partition')
