from ..closedform import zpair_elements
from .zk import Zk


class Zpair(Zk):
    """ Zpair class (Zk)

    Checks the closed form of Z(k, k+2), the integers whose partition holds
    both F_k and F_{k+2}, against the decompositions of every m <= N.

    Args:
        n ('int'): the limit N.
        k_max ('int') default=12: largest k checked.

    Examples:
        Zpair(n=10**5, k_max=12).run().passed

    """

    def _members(self, indices):
        return [k for k in indices if k + 2 in indices]

    def _closed_form(self, k, high):
        return zpair_elements(k, high)

    def _label(self, k):
        return 'Z({k},{k2})'.format(k=k, k2=k + 2)
