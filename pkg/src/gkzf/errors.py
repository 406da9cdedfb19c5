"""Exception types shared across the package."""


class GkzError(Exception):
    """Base class for package errors."""


class RankDeficient(GkzError):
    """Matrix rank is lower than the declared value."""


class ColumnRankDeficient(GkzError):
    """Linear solve requires independent columns."""


class RingMismatch(GkzError):
    """Operands live in different polynomial rings."""


class NonGenericWeight(GkzError):
    """A weight tie makes the initial ideal non-monomial."""


class FacetNotFullDim(GkzError):
    """A facet has fewer vertices than the configuration rank."""


class OrientationViolation(GkzError):
    """A cone generator has nonpositive weight."""


class WindowTooSmall(GkzError):
    """The lattice window contains no cone member besides the origin."""


class PoleAtOrigin(GkzError):
    """A series coefficient keeps a denominator factor vanishing at s = 0."""


class DegreeCapReached(GkzError):
    """Dual basis incomplete: the Hilbert function is still positive at the cap."""


class HomogeneityViolation(UserWarning):
    """Column vectors do not lie on a common affine hyperplane off the origin."""


class SpecError(GkzError):
    """Problem-file error, with position information when available."""

    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        if line is not None:
            where = f"line {line}" + (f", col {col}" if col is not None else "")
            message = f"{where}: {message}"
        super().__init__(message)
