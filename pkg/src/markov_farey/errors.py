"""Exception hierarchy. Every error is a ValueError so callers can catch broadly."""


class MarkovFareyError(ValueError):
    pass


class ZeroZero(MarkovFareyError):
    pass


class NotNeighbors(MarkovFareyError):
    pass


class InfiniteInput(MarkovFareyError):
    pass


class InvalidTriple(MarkovFareyError):
    pass


class IsInitial(MarkovFareyError):
    pass


class NonUniqueDescent(MarkovFareyError):
    """Zero or several complexity-decreasing directions were found."""


class WrongComponent(MarkovFareyError):
    pass


class DepthTooLarge(MarkovFareyError):
    pass


class BadColumn(MarkovFareyError):
    pass


class NotUnimodular(MarkovFareyError):
    pass


class Unclassifiable(MarkovFareyError):
    pass


class NotDivisible(MarkovFareyError):
    pass


class Inhomogeneous(MarkovFareyError):
    pass


class ParseError(MarkovFareyError):
    pass
