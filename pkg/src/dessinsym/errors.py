"""Exception hierarchy.

Every error carries an ``exit_code`` so the command line front end can map
failures onto its documented exit statuses without a lookup table.
"""


class DessinError(Exception):
    exit_code = 4


class InvalidInput(DessinError, ValueError):
    """A precondition on the arguments of an operation was violated."""

    exit_code = 1


class CapExceeded(DessinError):
    """A group closure grew beyond the allowed number of elements."""

    exit_code = 3


class NotGenerating(DessinError):
    """Proposed generator images do not generate the whole group."""


class GammaNotInvolution(DessinError, ValueError):
    pass


class NotRegular(DessinError):
    """The permutation pair does not generate a regular group action."""

    exit_code = 2


class InternalInvariant(DessinError, AssertionError):
    exit_code = 4


class ConstructionError(DessinError):
    exit_code = 3


class NotAMap(ConstructionError):
    pass


class NotBipartite(ConstructionError):
    pass


class UnsupportedDegree(ConstructionError):
    pass


class NotPrimePower(ConstructionError):
    pass


class OddPrimeVariantUnsupported(ConstructionError):
    pass


class MaximalityNotAsserted(DessinError):
    exit_code = 1


class IncompatibleHypothesis(DessinError):
    """Maximality was asserted for a surface where no maximal triangle group exists."""

    exit_code = 1


class ParseError(DessinError):
    exit_code = 1
