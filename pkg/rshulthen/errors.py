""" Exceptions and warning categories for rshulthen
"""
from __future__ import print_function, absolute_import, division, unicode_literals


class ConfigError(IOError):
    """ Unreadable or inconsistent run configuration """
    pass


class DomainError(ValueError):
    """ Argument outside the domain of a function """
    pass


class ComplexBranchError(DomainError):
    """ A square root in the NU or angular chain has a negative radicand """
    pass


class NonNormalizableError(DomainError):
    """ Positivity conditions for a normalizable solution are violated """
    pass


class BracketError(ValueError):
    """ Root bracket without a sign change """
    pass


class NumericError(ArithmeticError):
    """ Quadrature or eigensolve did not converge """
    pass


class RsHulthenWarning(UserWarning):
    pass


class ScanWarning(RsHulthenWarning):
    """ Part of an energy scan was skipped """
    pass


class TableMismatchWarning(RsHulthenWarning):
    """ Computed value disagrees with the tabulated one """
    pass


class ParameterTypoWarning(RsHulthenWarning):
    """ A parameter definition is presumed to carry a transcription slip """
    pass
