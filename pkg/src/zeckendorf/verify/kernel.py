import math
import random

from mpmath.ctx_mp import MPContext

from ..config import cfg
from ..closedform import floor_n_phi, MAX_KERNEL_INPUT
from .check import Check


class Kernel(Check):
    """ Kernel class (Check)

    Checks the exact floor(m * phi) kernel against mpmath evaluated with
    `dps` significant digits, for every m in [0, N] and for `samples` random
    m up to the kernel ceiling, and checks the integer square root
    bracketing r^2 <= 5 m^2 < (r+1)^2 on the samples.

    Args:
        n ('int'): the limit N.
        samples ('int') default=10000: random inputs drawn past N.
        seed ('int') default=0: seed of the random draw.
        dps ('int') default=50: mpmath decimal precision.

    """

    def _init_arguments(self):
        return {
            'required': ['n'],
            'optional': {
                'samples': cfg.get('kernel.samples'),
                'seed': cfg.get('kernel.seed'),
                'dps': cfg.get('kernel.dps'),
            }
        }

    def _context(self):
        context = MPContext()
        context.dps = self._dps
        return context, (1 + context.sqrt(5)) / 2

    @staticmethod
    def _floor(context, m):
        mp, phi = context
        return int(mp.floor(mp.mpf(m) * phi))

    def _compare(self, m, context, report):
        expected = self._floor(context, m)
        actual = floor_n_phi(m)
        if actual != expected:
            report.record(m, expected, actual, 'floor(m*phi)')

    def _prepare(self, low, high, report):
        context = self._context()
        if low == 1:
            self._compare(0, context, report)
        return context

    def _visit(self, n, frames, context, report):
        self._compare(n, context, report)

    def _finalize(self, report):
        context = self._context()
        draw = random.Random(self._seed)
        for _ in range(self._samples):
            m = draw.randint(0, MAX_KERNEL_INPUT)
            root = math.isqrt(5 * m * m)
            if not root * root <= 5 * m * m < (root + 1) * (root + 1):
                report.record(m, 'r^2 <= 5m^2 < (r+1)^2', root, 'isqrt')
            self._compare(m, context, report)
        report.details['samples'] = self._samples
        report.details['dps'] = self._dps
