"""Exception types shared across the package.

The CLI maps these onto its exit-code contract: parameter and hypothesis
problems exit 2, resource aborts exit 3.
"""


class PacklabError(Exception):
    """Base class for all package-specific errors."""


class ParameterRangeError(PacklabError, ValueError):
    """A numeric argument lies outside the range a formula or builder supports."""


class HypothesisError(PacklabError, ValueError):
    """An input graph fails the degree or structure hypothesis an algorithm needs."""


class CapExceededError(PacklabError, RuntimeError):
    """A configured resource cap (search nodes, enumeration width) was hit.

    Raised instead of returning a wrong "no": hitting a cap is never an answer.
    """


class Graph6Error(PacklabError, ValueError):
    """Malformed graph6 input."""
