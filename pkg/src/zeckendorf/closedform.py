'''
Module:
    zeckendorf.closedform

Description:
    Exact evaluation of the Beatty-type sets that describe L(n):

        S1          n with L(n) < L(n+1)
        S2          n with L(n) > L(n+1), also the n for which n+1 is a divot
        S3          n for which n+1 is a peak
        Z(k)        integers whose partition holds F_k
        Z(k, k+2)   integers whose partition holds F_k and F_{k+2}

    Every irrational floor reduces to one kernel, floor(m * phi), computed as
    (m + isqrt(5 m^2)) // 2. No floating point is involved anywhere.

    Generator parameters are called `i` throughout; `n` is always the integer
    being classified.
'''

import math
import logging
import itertools
from enum import Enum
from fractions import Fraction
from collections import namedtuple
from dataclasses import dataclass

from .config import MAX_VALUE, MAX_INTERMEDIATE
from .core import DEFAULT_TABLE, check_value
from .exceptions import RangeError, UnknownSet

logger = logging.getLogger(__name__)

# largest m for which 5 m^2 stays within MAX_INTERMEDIATE
MAX_KERNEL_INPUT = math.isqrt(MAX_INTERMEDIATE // 5)

DensityLimits = namedtuple('DensityLimits', ['up', 'down', 'flat', 'error'])


def floor_n_phi(m):
    ''' floor(m * phi) for a non-negative integer m.

    For integer a and irrational x, floor((a + x) / 2) equals
    floor((a + floor(x)) / 2), and m * phi = (m + sqrt(5 m^2)) / 2.

    Args:
        m ('int'): 0 <= m <= MAX_KERNEL_INPUT.

    Returns:
        int: floor(m * phi).

    '''
    check_value(m, name='m', high=MAX_KERNEL_INPUT)
    return (m + math.isqrt(5 * m * m)) // 2


def floor_div_phi(m):
    ''' floor(m / phi), using 1/phi = phi - 1. '''
    return floor_n_phi(m) - m


def floor_phi_shift(i):
    ''' floor(i/phi + phi), which is also floor((i + phi^2) / phi).

    With phi^2 = phi + 1 the argument equals (i+1) * phi - i.
    '''
    check_value(i, name='i', high=MAX_KERNEL_INPUT - 1)
    return floor_n_phi(i + 1) - i


def _bounded(value):
    if value > MAX_INTERMEDIATE:
        raise RangeError('Closed-form value exceeds {m}'
                         .format(m=MAX_INTERMEDIATE))
    return value


def s1_element(i):
    ''' i-th element of S1 = { floor((i+1)/phi) + 2i : i >= 1 }. '''
    check_value(i, name='i', low=1, high=MAX_KERNEL_INPUT - 1)
    return _bounded(floor_div_phi(i + 1) + 2 * i)


def s2_element(i):
    ''' i-th element of S2 = { 2 floor((i+1)/phi) + 3i - 1 : i >= 1 }. '''
    check_value(i, name='i', low=1, high=MAX_KERNEL_INPUT - 1)
    return _bounded(2 * floor_div_phi(i + 1) + 3 * i - 1)


def s3_element(i):
    ''' i-th element of S3 = { 3 floor(i/phi + phi) + 5i : i >= 0 }. '''
    check_value(i, name='i', high=MAX_KERNEL_INPUT - 1)
    return _bounded(3 * floor_phi_shift(i) + 5 * i)


def up_element_alt(i):
    ''' floor((i + phi^2)/phi) + 2i - 1 for i >= 1.

    The rising set written from the integers that contain F_2, shifted down
    by one; it coincides with S1.
    '''
    check_value(i, name='i', low=1, high=MAX_KERNEL_INPUT - 1)
    return _bounded(floor_phi_shift(i) + 2 * i - 1)


def down_element_alt(i):
    ''' 2 floor((i + phi^2)/phi) + 3(i - 1) for i >= 1.

    The n with F_3 in P(n+3); it coincides with S2.
    '''
    check_value(i, name='i', low=1, high=MAX_KERNEL_INPUT - 1)
    return _bounded(2 * floor_phi_shift(i) + 3 * (i - 1))


def _check_k(k):
    # F_{k+3} must exist in the table for the pair sets
    check_value(k, name='k', low=2, high=DEFAULT_TABLE.max_index - 3)


def zk_block(k, i):
    ''' Start and width of the i-th run of consecutive elements of Z(k).

    Z(k) = { F_k floor((i + phi^2)/phi) + i F_{k+1} + j : 0 <= j < F_{k-1} }.

    Returns:
        tuple: (start, width).

    '''
    _check_k(k)
    table = DEFAULT_TABLE
    start = table[k] * floor_phi_shift(i) + i * table[k + 1]
    return _bounded(start), table[k - 1]


def zpair_block(k, i):
    ''' Start and width of the i-th run of Z(k, k+2).

    Z(k, k+2) = { F_{k+2} floor((i + phi^2)/phi) + i F_{k+3} + F_k + j :
    0 <= j < F_{k-1} }.

    Returns:
        tuple: (start, width).

    '''
    _check_k(k)
    table = DEFAULT_TABLE
    start = table[k + 2] * floor_phi_shift(i) + i * table[k + 3] + table[k]
    return _bounded(start), table[k - 1]


def _block_elements(block, k, limit):
    check_value(limit, name='limit', low=1, high=MAX_INTERMEDIATE)
    runs = []
    for i in itertools.count():
        start, width = block(k, i)
        if start > limit:
            break
        runs.append(range(start, min(start + width - 1, limit) + 1))
    # the runs are expected to be disjoint and ordered; merge regardless
    return sorted(set(itertools.chain.from_iterable(runs)))


def zk_elements(k, limit):
    ''' Elements of Z(k) up to limit, increasing and without duplicates.

    Args:
        k ('int'): Fibonacci index, k >= 2.
        limit ('int'): largest element to return.

    Returns:
        list: the elements.

    '''
    return _block_elements(zk_block, k, limit)


def zpair_elements(k, limit):
    ''' Elements of Z(k, k+2) up to limit, increasing and without duplicates.

    '''
    return _block_elements(zpair_block, k, limit)


class Family(Enum):
    S1 = 's1'
    S2 = 's2'
    S3 = 's3'
    ZK = 'zk'
    ZPAIR = 'zpair'


@dataclass(frozen=True)
class SetId(object):
    """ SetId class

    Names one closed-form set. Z(k) and Z(k, k+2) carry their parameter k.

    Examples:
        SetId.parse('s1')
        SetId.parse('zk', k=3)
        SetId(Family.ZPAIR, 2)
    """

    family: Family
    k: int = None

    def __post_init__(self):
        if self.family in (Family.ZK, Family.ZPAIR):
            if self.k is None:
                raise UnknownSet('Set {f} needs a parameter k >= 2'
                                 .format(f=self.family.value))
            _check_k(self.k)
        elif self.k is not None:
            raise UnknownSet('Set {f} takes no parameter k'
                             .format(f=self.family.value))

    @classmethod
    def parse(cls, name, k=None):
        try:
            family = Family(name.lower())
        except ValueError:
            raise UnknownSet('Unknown set "{n}", expected one of: {c}'.format(
                n=name, c=', '.join(f.value for f in Family)))
        return cls(family, k)

    def __str__(self):
        if self.family is Family.ZK:
            return 'Z({k})'.format(k=self.k)
        if self.family is Family.ZPAIR:
            return 'Z({k},{k2})'.format(k=self.k, k2=self.k + 2)
        return self.family.name


S1 = SetId(Family.S1)
S2 = SetId(Family.S2)
S3 = SetId(Family.S3)

# (generator, first parameter) for the single-parameter sets
_ELEMENTS = {
    Family.S1: (s1_element, 1),
    Family.S2: (s2_element, 1),
    Family.S3: (s3_element, 0),
}


def _last_at_most(element, n, low):
    ''' Largest i >= low with element(i) <= n, or None.

    element must be strictly increasing with element(i) >= i, which brackets
    the answer below n + 1.
    '''
    def exceeds(i):
        try:
            return element(i) > n
        except RangeError:
            # past the intermediate ceiling, hence past any valid n
            return True

    if exceeds(low):
        return None
    high = min(n, MAX_KERNEL_INPUT - 1)
    while low < high:
        middle = (low + high + 1) // 2
        if not exceeds(middle):
            low = middle
        else:
            high = middle - 1
    return low


def _block_of(set_id):
    block = zk_block if set_id.family is Family.ZK else zpair_block
    return lambda i: block(set_id.k, i)


def membership(set_id, n):
    ''' Whether n belongs to the identified set.

    Inverts the increasing generators by binary search on the parameter.

    Args:
        set_id ('SetId'): the set.
        n ('int'): positive integer, at most MAX_VALUE.

    Returns:
        bool: membership.

    '''
    check_value(n, low=1)
    if set_id.family in _ELEMENTS:
        element, first = _ELEMENTS[set_id.family]
        i = _last_at_most(element, n, first)
        return i is not None and element(i) == n

    block = _block_of(set_id)
    i = _last_at_most(lambda i: block(i)[0], n, 0)
    if i is None:
        return False
    start, width = block(i)
    return n - start < width


def zk_membership(k, n):
    ''' Whether the partition of n holds F_k, from the closed form alone. '''
    return membership(SetId(Family.ZK, k), n)


def zpair_membership(k, n):
    ''' Whether the partition of n holds both F_k and F_{k+2}. '''
    return membership(SetId(Family.ZPAIR, k), n)


def iter_elements(set_id, start=1):
    ''' Endless increasing iterator over the elements >= start.

    Args:
        set_id ('SetId'): the set.
        start ('int'): smallest element of interest.

    '''
    check_value(start, name='start', low=1, high=MAX_VALUE)
    if set_id.family in _ELEMENTS:
        element, first = _ELEMENTS[set_id.family]
        i = _last_at_most(element, start - 1, first)
        i = first if i is None else i + 1
        while True:
            yield element(i)
            i += 1

    block = _block_of(set_id)
    i = _last_at_most(lambda i: block(i)[0], start, 0) or 0
    last = 0
    while True:
        first_value, width = block(i)
        for value in range(max(first_value, start, last + 1),
                           first_value + width):
            last = value
            yield value
        i += 1


def elements(set_id, limit=None, count=None):
    ''' Elements in increasing order, either up to limit or the first count.

    Args:
        set_id ('SetId'): the set.
        limit ('int'): largest element to return.
        count ('int'): number of elements to return.

    Returns:
        list: the elements.

    '''
    if (limit is None) == (count is None):
        raise ValueError('Exactly one of limit or count is required')
    if count is not None:
        check_value(count, name='count', high=MAX_VALUE)
        return list(itertools.islice(iter_elements(set_id), count))
    check_value(limit, name='limit', high=MAX_VALUE)
    if set_id.family is Family.ZK:
        return zk_elements(set_id.k, limit) if limit else []
    if set_id.family is Family.ZPAIR:
        return zpair_elements(set_id.k, limit) if limit else []
    return list(itertools.takewhile(lambda value: value <= limit,
                                    iter_elements(set_id)))


def containing_sets(n):
    ''' Which of S1, S2, S3 contain n. '''
    return [set_id for set_id in (S1, S2, S3) if membership(set_id, n)]


def limit_densities(digits=30):
    ''' Rational approximations of the limiting densities.

    phi/(1+2phi) = (3 - sqrt 5)/2 for rising and flat steps, and
    phi/(3phi+2) = sqrt 5 - 2 for falling steps. sqrt 5 is truncated to
    `digits` decimals with the exact integer square root.

    Args:
        digits ('int'): decimal digits kept for sqrt 5.

    Returns:
        DensityLimits: (up, down, flat, error) where every constant is within
            `error` of its true value.

    '''
    check_value(digits, name='digits', low=1, high=10000)
    scale = 10 ** digits
    root5 = Fraction(math.isqrt(5 * scale * scale), scale)
    up = (3 - root5) / 2
    return DensityLimits(up, root5 - 2, up, Fraction(1, scale))
