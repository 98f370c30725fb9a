class ZeckendorfError(Exception):
    '''Base class of every error raised by the zeckendorf package.'''


class RangeError(ZeckendorfError, ValueError):
    '''An integer lies outside the documented input ceilings.

    Raised instead of wrapping around or clamping.
    '''


class InvalidRepresentation(ZeckendorfError, ValueError):
    '''An index list breaks the Zeckendorf invariants.'''


class UnknownSet(ZeckendorfError, LookupError):
    '''No closed-form set goes by the requested name.'''


class UnknownCheck(ZeckendorfError, LookupError):
    '''No verification check goes by the requested name.'''


class UsageError(ZeckendorfError):
    '''Arguments are individually valid but do not fit together.'''


class SweepAuditError(ZeckendorfError):
    '''The successor walker drifted away from a fresh decomposition.'''
