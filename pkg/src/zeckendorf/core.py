'''
Module:
    zeckendorf.core

Description:
    Exact Fibonacci machinery: the Fibonacci table, Zeckendorf decomposition
    and reconstruction, the summand count L(n), the step f(n) = L(n+1) - L(n)
    and successor arithmetic carried out directly on index lists.

    Indices follow F_0 = 0, F_1 = F_2 = 1, F_3 = 2, ... and a representation
    only ever uses indices >= 2, so the duplicate value 1 is never ambiguous.
    Every value is a Python int; the ceilings in `zeckendorf.config` are
    enforced with RangeError.
'''

import bisect
import logging
from enum import Enum
from collections import namedtuple
from dataclasses import dataclass

from .config import MAX_VALUE, MAX_INTERMEDIATE
from .exceptions import RangeError, InvalidRepresentation

logger = logging.getLogger(__name__)

Witness = namedtuple('Witness', ['n', 'drop'])


@dataclass(frozen=True)
class FibTable(object):
    """ FibTable class

    Immutable table of Fibonacci numbers where values[k] holds F_k. Entry 0
    keeps the base case F_0 = 0 so that indices line up with the recurrence.

    A table never grows in place; `extended` and `covering` build a new one.

    Examples:
        table = FibTable.covering(1000)
        table[11]               # 89
        table.index_of(89)      # 11
    """

    values: tuple

    def __post_init__(self):
        values = tuple(self.values)
        if values[:3] != (0, 1, 1) or any(
                values[k] != values[k - 1] + values[k - 2]
                for k in range(3, len(values))):
            raise ValueError('Table values do not follow the Fibonacci '
                             'recurrence')
        object.__setattr__(self, 'values', values)

    @classmethod
    def covering(cls, n):
        ''' Builds the smallest table whose largest entry exceeds n.

        Args:
            n ('int'): the largest integer the table must handle.

        Returns:
            FibTable: the new table.

        '''
        values = [0, 1, 1]
        while values[-1] <= n:
            values.append(values[-1] + values[-2])
        return cls(tuple(values))

    @property
    def max_index(self):
        return len(self.values) - 1

    def __getitem__(self, k):
        if not 1 <= k <= self.max_index:
            raise RangeError('Fibonacci index {k} outside table range 1..{m}'
                             .format(k=k, m=self.max_index))
        return self.values[k]

    def covers(self, n):
        return self.values[-1] > n

    def extended(self, n):
        ''' Returns this table if it covers n, else a rebuilt one that does.

        '''
        if self.covers(n):
            return self
        logger.debug('Rebuilding Fibonacci table to cover {n}'.format(n=n))
        return FibTable.covering(n)

    def largest_index_at_most(self, n):
        ''' Index k >= 2 of the largest Fibonacci number F_k <= n.

        Args:
            n ('int'): a positive integer covered by the table.

        Returns:
            int: the index k.

        '''
        # F_1 == F_2, bisect_right lands past both so k is never 1
        return bisect.bisect_right(self.values, n) - 1

    def index_of(self, value):
        ''' Returns k >= 2 with F_k == value, or None. '''
        if value < 1:
            return None
        k = self.largest_index_at_most(value)
        return k if self.values[k] == value else None


# covers every closed-form intermediate, so no public call ever rebuilds it
DEFAULT_TABLE = FibTable.covering(MAX_INTERMEDIATE)


def _table(table):
    return DEFAULT_TABLE if table is None else table


@dataclass(frozen=True)
class ZeckRep(object):
    """ ZeckRep class

    Canonical Zeckendorf representation: strictly increasing Fibonacci
    indices, the smallest at least 2, neighbours at least 2 apart. The empty
    representation stands for 0.

    Examples:
        rep = ZeckRep((2, 4, 6))
        len(rep)                # 3 summands
        rep.values()            # (1, 3, 8)
    """

    indices: tuple = ()

    def __post_init__(self):
        indices = tuple(self.indices)
        if not ZeckRep.is_valid(indices):
            raise InvalidRepresentation(
                'Not a Zeckendorf index list: {i}'.format(i=list(indices)))
        object.__setattr__(self, 'indices', indices)

    @staticmethod
    def is_valid(indices):
        ''' Checks the Zeckendorf invariants on an ascending index list.

        Args:
            indices ('iterable'): candidate indices.

        Returns:
            bool: True when the list is a valid representation.

        '''
        previous = 0
        for index in indices:
            if isinstance(index, bool) or not isinstance(index, int):
                return False
            if index < previous + 2:
                return False
            previous = index
        return True

    @classmethod
    def from_indices(cls, indices):
        return cls(tuple(indices))

    def __len__(self):
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    def __contains__(self, index):
        return index in self.indices

    @property
    def smallest(self):
        return self.indices[0] if self.indices else None

    def values(self, table=None):
        table = _table(table)
        return tuple(table[k] for k in self.indices)


class StepClass(Enum):
    """ StepClass enum

    Sign of f(n) = L(n+1) - L(n).
    """

    UP = 'up'
    DOWN = 'down'
    FLAT = 'flat'

    @classmethod
    def from_step(cls, f):
        if f > 0:
            return cls.UP
        if f < 0:
            return cls.DOWN
        return cls.FLAT

    @classmethod
    def from_smallest_index(cls, index):
        ''' Classifies n from the smallest index of P(n+1).

        L rises exactly when F_2 is in P(n+1) and falls exactly when P(n+1)
        holds none of F_2, F_3, F_4, i.e. when its smallest index is >= 5.

        Args:
            index ('int'): smallest index in the decomposition of n+1.

        Returns:
            StepClass: the class of n.

        '''
        if index == 2:
            return cls.UP
        if index >= 5:
            return cls.DOWN
        return cls.FLAT


def check_value(n, name='n', low=0, high=MAX_VALUE):
    ''' Validates an integer argument against the documented ceilings.

    Args:
        n ('int'): the value.
        name ('str'): argument name used in the message.
        low ('int'): smallest accepted value.
        high ('int'): largest accepted value.

    Raises:
        TypeError: if n is not an int.
        RangeError: if n is outside [low, high].

    '''
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError('{name} must be an integer, got {t}'
                        .format(name=name, t=type(n).__name__))
    if not low <= n <= high:
        raise RangeError('{name} = {n} outside supported range [{lo}, {hi}]'
                         .format(name=name, n=n, lo=low, hi=high))


def decompose(n, table=None):
    ''' Greedy Zeckendorf decomposition.

    Repeatedly removes the largest Fibonacci number not exceeding what is
    left; the greedy choice can never pick two consecutive indices.

    Args:
        n ('int'): non-negative integer, at most MAX_VALUE.
        table ('FibTable'): table to draw from, rebuilt if too small.

    Returns:
        ZeckRep: the representation of n.

    Examples:
        decompose(100).indices  # (4, 6, 11)

    '''
    check_value(n)
    table = _table(table).extended(n)
    indices = []
    while n:
        k = table.largest_index_at_most(n)
        indices.append(k)
        n -= table.values[k]
    indices.reverse()
    return ZeckRep(tuple(indices))


def recompose(rep, table=None):
    ''' Sums the Fibonacci numbers named by a representation.

    Args:
        rep ('ZeckRep'): the representation.
        table ('FibTable'): table to read from.

    Returns:
        int: the represented integer.

    Raises:
        RangeError: if the sum exceeds MAX_VALUE.

    '''
    total = sum(rep.values(table))
    if total > MAX_VALUE:
        raise RangeError('Representation {i} sums past {m}'
                         .format(i=list(rep.indices), m=MAX_VALUE))
    return total


def summand_count(n):
    ''' L(n), the number of summands in the Zeckendorf partition of n.

    L(0) = 0 extends the function to zero.
    '''
    return len(decompose(n))


def summands(n):
    ''' P(n), the Fibonacci numbers in the partition of n, ascending. '''
    return decompose(n).values()


def step(n):
    ''' f(n) = L(n+1) - L(n).

    Args:
        n ('int'): positive integer with n+1 <= MAX_VALUE.

    Returns:
        int: the signed difference.

    '''
    check_value(n, low=1, high=MAX_VALUE - 1)
    return summand_count(n + 1) - summand_count(n)


def carry_increment(descending):
    ''' Adds one to a representation held as a descending index list.

    The list is modified in place; the smallest index sits at the end so
    every edit happens at the tail. F_2 becomes F_3, F_3 becomes F_4,
    otherwise F_2 is appended; then adjacent pairs (a, a+1) at the low end
    merge into a+2 until no two indices are adjacent.

    Args:
        descending ('list'): valid indices in decreasing order.

    '''
    if not descending or descending[-1] >= 4:
        descending.append(2)
        return
    descending[-1] += 1
    while len(descending) > 1 and descending[-2] == descending[-1] + 1:
        low = descending.pop()
        descending[-1] = low + 2


# largest index whose Fibonacci number fits under MAX_VALUE
_CEILING_INDEX = DEFAULT_TABLE.largest_index_at_most(MAX_VALUE)


def successor(rep):
    ''' Representation of recompose(rep) + 1, computed on indices only.

    Args:
        rep ('ZeckRep'): a valid representation.

    Returns:
        ZeckRep: the representation of the next integer.

    Examples:
        successor(ZeckRep((2, 4, 6))).indices   # (7,)

    '''
    if rep.indices and rep.indices[-1] >= _CEILING_INDEX \
            and recompose(rep) >= MAX_VALUE:
        raise RangeError('No successor below {m}'.format(m=MAX_VALUE))
    descending = list(reversed(rep.indices))
    carry_increment(descending)
    descending.reverse()
    return ZeckRep(tuple(descending))


def classify_step(n):
    ''' Classifies n by the sign of f(n) from the decomposition of n+1.

    Args:
        n ('int'): positive integer.

    Returns:
        StepClass: UP, DOWN or FLAT.

    '''
    check_value(n, low=1, high=MAX_VALUE - 1)
    return StepClass.from_smallest_index(decompose(n + 1).smallest)


def deep_witness(k, table=None):
    ''' Member of the family n = F_{2k+1} - 1 = F_2 + F_4 + ... + F_{2k}.

    Here n+1 is a single Fibonacci number while n has k summands, so
    f(n) = 1 - k. At k = 1 the drop is 0 (n = 1).

    Args:
        k ('int'): family parameter, k >= 1.
        table ('FibTable'): table to read from.

    Returns:
        Witness: named tuple (n, drop).

    '''
    table = _table(table)
    check_value(k, name='k', low=1, high=(table.max_index - 1) // 2)
    top = table[2 * k + 1]
    if top > MAX_VALUE:
        raise RangeError('F_{i} exceeds {m}'.format(i=2 * k + 1, m=MAX_VALUE))
    return Witness(top - 1, 1 - k)
