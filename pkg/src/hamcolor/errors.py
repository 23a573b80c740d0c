"""Exception types shared across the package."""


class HamcolorError(Exception):
    """Base class for all package-specific errors."""


class NotATreeError(HamcolorError):
    """Edge list does not describe a connected acyclic graph."""


class BadVertexIdError(HamcolorError):
    """Vertex id outside 0..n-1, or otherwise malformed."""


class BadParamsError(HamcolorError):
    """Family generator parameters out of range."""


class NotApplicableError(HamcolorError):
    """Operation requires order >= 4 and maximum degree >= 3."""


class NotAPermutationError(HamcolorError):
    """Ordering is not a permutation of the vertex ids."""


class NegativeIncrementError(HamcolorError):
    """The arithmetic coloring would decrease along the ordering."""


class SearchFailedError(HamcolorError):
    """No certified ordering was found (not a proof that none exists)."""


class IncompleteColoringError(HamcolorError):
    """Coloring does not assign a color to every vertex."""


class NegativeColorError(HamcolorError):
    """Colors must be non-negative integers."""


class TooLargeError(HamcolorError):
    """Instance exceeds the exact solver's size limit."""


class FormatError(HamcolorError):
    """Malformed tree, ordering or coloring text."""


class InternalError(HamcolorError):
    """A produced ordering failed its own certification; indicates a bug."""
