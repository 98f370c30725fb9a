from ..config import cfg
from ..core import check_value
from ..closedform import zk_elements
from .check import Check


class Zk(Check):
    """ Zk class (Check)

    Checks the closed form of Z(k), the integers whose partition holds F_k,
    against the decompositions of every m <= N, element for element, for
    each k from 2 to k_max.

    Args:
        n ('int'): the limit N.
        k_max ('int') default=15: largest k checked.

    Examples:
        Zk(n=10**5, k_max=15).run().passed

    """

    full_indices = True

    def _init_arguments(self):
        return {
            'required': ['n'],
            'optional': {
                'k_max': cfg.get('{name}.k_max'.format(name=self.name)),
            }
        }

    def _validate(self):
        super()._validate()
        check_value(self._k_max, name='k_max', low=2, high=90)

    def _prepare(self, low, high, report):
        return {k: [] for k in range(2, self._k_max + 1)}

    def _members(self, indices):
        return indices

    def _visit(self, n, frames, context, report):
        for k in self._members(frames[0].indices):
            if k in context:
                context[k].append(n)

    def _closed_form(self, k, high):
        return zk_elements(k, high)

    def _label(self, k):
        return 'Z({k})'.format(k=k)

    def _finish(self, low, high, context, report):
        for k, oracle in context.items():
            claimed = [m for m in self._closed_form(k, high) if m >= low]
            if claimed == oracle:
                continue
            oracle_set = set(oracle)
            claimed_set = set(claimed)
            for m in sorted(oracle_set ^ claimed_set):
                report.record(m, m in claimed_set, m in oracle_set,
                              self._label(k))
