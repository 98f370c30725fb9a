import logging
from enum import Enum
from collections import defaultdict

from ...core import DEFAULT_TABLE, summand_count, check_value
from ...config import MAX_VALUE

logger = logging.getLogger(__name__)


class ExtremumClass(Enum):
    """ ExtremumClass enum

    Shape of L around a point m: a peak when L(m-1) < L(m) > L(m+1), a divot
    when L(m-1) > L(m) < L(m+1).
    """

    PEAK = 'peak'
    DIVOT = 'divot'
    NEITHER = 'neither'

    @classmethod
    def from_lengths(cls, before, at, after):
        if before < at > after:
            return cls.PEAK
        if before > at < after:
            return cls.DIVOT
        return cls.NEITHER


def classify_extremum(m):
    ''' Classifies m >= 2 as a peak, a divot or neither of L.

    Args:
        m ('int'): the point, with m+1 <= MAX_VALUE.

    Returns:
        ExtremumClass: the classification.

    '''
    check_value(m, name='m', low=2, high=MAX_VALUE - 1)
    return ExtremumClass.from_lengths(
        summand_count(m - 1), summand_count(m), summand_count(m + 1))


def enumerate_partitions(low, high, max_index, table=DEFAULT_TABLE):
    ''' Every valid index subset drawn from 2..max_index whose sum lies in
        [low, high], grouped by sum.

    Built by brute force, without the greedy algorithm.

    Args:
        low ('int'): smallest sum of interest.
        high ('int'): largest sum of interest.
        max_index ('int'): largest index allowed in a subset.
        table ('FibTable'): Fibonacci values.

    Returns:
        dict: sum -> list of ascending index tuples.

    '''
    found = defaultdict(list)
    chosen = []

    def extend(total, next_index):
        if chosen and total >= low:
            found[total].append(tuple(chosen))
        for index in range(next_index, max_index + 1):
            value = table[index]
            if total + value > high:
                break
            chosen.append(index)
            extend(total + value, index + 2)
            chosen.pop()

    extend(0, 2)
    return found
