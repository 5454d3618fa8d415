"""Exception types shared across the package."""


class YbekitError(Exception):
    """Base class for all package-specific errors."""


class InvalidSolutionError(YbekitError):
    """A sigma table is structurally broken (wrong shape, non-bijective rows)."""


class BudgetExceededError(YbekitError):
    """A size, order or time cap was exceeded; partial results are refused."""


class ClassificationShapeError(YbekitError):
    """The classification produced a primitive class of impossible shape.

    Raised when enumeration finds a primitive solution class that is not the
    constant n-cycle solution at a prime size; this falsifies the
    implementation, not the mathematics.
    """


class ConstructionError(YbekitError):
    """Internal consistency failure while building a derived structure.

    The additive closure on the permutation group of a valid solution is
    guaranteed to exist; failure to build it (or any post-construction
    invariant failure) indicates a bug upstream.
    """
