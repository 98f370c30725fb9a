import math
from fractions import Fraction

from ..config import cfg
from ..closedform import limit_densities
from .check import Check


class Density(Check):
    """ Density class (Check)

    Compares the observed fractions of rising, falling and flat steps among
    n <= N with their limits, phi/(1+2phi), phi/(3phi+2) and phi/(1+2phi).

    The limits are exact rationals within 10**-digits of the true constants.
    A density passes when its gap plus that error stays within the
    tolerance. Only the limits are known, not a convergence rate, so the
    default tolerance 2/isqrt(N) is a guide rather than a bound.

    Args:
        n ('int'): the limit N.
        tolerance ('Fraction') default=2/isqrt(N): largest accepted gap.
        digits ('int') default=30: decimal digits of the limit constants.

    CLI Argument       |  Class Argument
    -------------------------------------------------
    --n=value          |  n=value
    --tolerance=value  |  tolerance=Fraction(value)

    Examples:
        report = Density(n=10**6, tolerance=Fraction(1, 10**5)).run()
        report.details['gaps']

    """

    def _init_arguments(self):
        return {
            'required': ['n'],
            'optional': {
                'tolerance': cfg.get('density.tolerance'),
                'digits': cfg.get('density.digits'),
            }
        }

    def _finalize(self, report):
        limits = limit_densities(self._digits)
        tolerance = self._tolerance
        if tolerance is None:
            tolerance = Fraction(2, math.isqrt(self._n))
        tolerance = Fraction(tolerance)

        observed = (report.density_up, report.density_down,
                    report.density_flat)
        expected = (limits.up, limits.down, limits.flat)
        gaps = tuple(abs(o - e) for o, e in zip(observed, expected))

        for name, gap in zip(('up', 'down', 'flat'), gaps):
            if gap + limits.error > tolerance:
                report.record(self._n, '<= {t}'.format(t=float(tolerance)),
                              float(gap), 'density {name}'.format(name=name))

        report.details['gaps'] = gaps
        report.details['limits'] = expected
        report.details['precision'] = limits.error
        report.details['tolerance'] = tolerance
