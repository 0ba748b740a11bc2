"""Exception hierarchy.

Parse problems derive from :class:`GraphParseError`, numerical breakdowns from
:class:`NumericalFailure`. The CLI maps the two families onto distinct exit
codes.
"""


class GraphFramesError(Exception):
    """Base class for all library errors."""


class GraphParseError(GraphFramesError, ValueError):
    """Input text could not be turned into a valid object."""


class MalformedLine(GraphParseError):
    pass


class IndexOutOfRange(GraphFramesError, IndexError):
    pass


class EdgeIndexOutOfRange(IndexOutOfRange, GraphParseError):
    """An edge-list line names a vertex outside ``1..N``."""


class DuplicateEdge(GraphParseError):
    pass


class NonPositiveWeight(GraphParseError):
    pass


class SelfLoop(GraphParseError):
    pass


class DuplicateAbscissa(GraphFramesError, ValueError):
    pass


class DimensionMismatch(GraphFramesError, ValueError):
    pass


class EmptySystem(GraphFramesError, ValueError):
    pass


class EmptyScaleSet(GraphFramesError, ValueError):
    pass


class GeneratorCountMismatch(GraphFramesError, ValueError):
    pass


class NumericalFailure(GraphFramesError, ArithmeticError):
    """A computation finished but failed its own accuracy check."""


class ConvergenceFailure(NumericalFailure):
    pass


class SingularFrameOperator(NumericalFailure):
    pass
