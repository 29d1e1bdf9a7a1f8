from .poly import ParseError
from .stdbasis import ResourceLimitError


class HypothesisError(ValueError):
    """An input fails a machine-checked hypothesis of the requested construction."""


class ReducednessError(HypothesisError):
    """The defining ideal is not known to be reduced."""


__all__ = ["HypothesisError", "ParseError", "ReducednessError", "ResourceLimitError"]
