"""Exception hierarchy shared by every module."""


class SymcolorError(Exception):
    """Base class for all errors raised by symcolor."""


class GraphError(SymcolorError, ValueError):
    """Malformed graph input (loops, out-of-range ids, disconnectedness)."""


class GeneratorContractError(SymcolorError):
    """A generator broke the layering contract."""


class PreconditionError(SymcolorError, ValueError):
    pass


class ColoringDomainError(SymcolorError, ValueError):
    """Coloring and graph disagree on the set of colored sites, or on kind."""


class ResourceLimitError(SymcolorError):
    """A search budget ran out before an answer was certified.

    ``last_refuted`` carries the largest palette size proven infeasible, if any.
    """

    def __init__(self, message, last_refuted=None):
        super().__init__(message)
        self.last_refuted = last_refuted


class ParameterUndefined(SymcolorError):
    """No finite palette admits a valid coloring (e.g. D'(K2))."""


class AlgorithmFailure(SymcolorError):
    """A constructive procedure failed its own postcondition.

    ``trace`` holds whatever partial trace was recorded.
    """

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace


class UnsupportedStructure(SymcolorError):
    pass


class FiniteObstruction(SymcolorError):
    pass


class RefutationError(SymcolorError):
    """No coloring exists; ``depth`` is the first truncation depth that fails."""

    def __init__(self, message, depth=None):
        super().__init__(message)
        self.depth = depth
