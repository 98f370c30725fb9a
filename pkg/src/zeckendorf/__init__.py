'''
Module:
    zeckendorf

Description:
    The `zeckendorf` package decomposes integers into their Zeckendorf
    partitions and characterizes how the number of summands L(n) changes
    between consecutive integers.

    It ships exact closed-form generators for the sets where L rises, falls
    or stays flat, peak/divot detection, and brute-force sweeps that check
    every one of those characterizations against first principles.
'''

__version__ = '26.10'
__author__ = 'zeckendorf developers'
__copyright__ = 'Copyright (c) 2026, zeckendorf developers'

from .exceptions import ZeckendorfError, RangeError, InvalidRepresentation
from .core import (FibTable, ZeckRep, StepClass, decompose, recompose,
                   summand_count, summands, step, successor, classify_step,
                   deep_witness)
