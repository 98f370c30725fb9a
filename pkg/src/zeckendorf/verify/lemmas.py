from ..core import StepClass
from .check import Check


class Lemmas(Check):
    """ Lemmas class (Check)

    Checks the statements on small summands that the characterization of
    L rests on, for every n <= N, writing P(m) for the partition of m:

        - f(n) > 0 exactly when F_2 is in P(n+1)
        - f(n) < 0 exactly when P(n+1) holds none of F_2, F_3, F_4
        - P(n+1) holds none of F_2, F_3, F_4 exactly when F_3 is in P(n+3)
        - F_2 in P(n+1) with P(n+2) free of F_2, F_3, F_4 exactly when both
          F_2 and F_4 are in P(n+1)
        - f(n) < 0 implies f(n+1) > 0
        - f(n) > 0 implies f(n) = 1

    Args:
        n ('int'): the limit N.

    """

    window = 3

    def _visit(self, n, frames, context, report):
        f = frames[1].length - frames[0].length
        actual = StepClass.from_step(f)
        low1 = frames[1].indices
        low2 = frames[2].indices
        low3 = frames[3].indices

        claimed = StepClass.from_smallest_index(low1[0])
        if claimed is not actual:
            report.record(n, actual.value, claimed.value, 'classify_step')

        free1 = low1[0] >= 5
        if free1 != (low3[0] == 3):
            report.record(n, free1, low3[0] == 3, 'F_3 in P(n+3)')

        peak_form = low1[0] == 2 and low2[0] >= 5
        if peak_form != (low1[:2] == (2, 4)):
            report.record(n, peak_form, low1[:2] == (2, 4), 'F_2, F_4')

        if f < 0 and frames[2].length <= frames[1].length:
            report.record(n, 'f(n+1) > 0',
                          frames[2].length - frames[1].length, 'down-up')
        if f > 1:
            report.record(n, 1, f, 'positive step')
