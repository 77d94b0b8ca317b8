"""Exception types raised across the package.

Every error raised by this package derives from IncgradeError, so callers
can catch one type at the boundary (the CLI maps them to exit code 2).
"""


class IncgradeError(Exception):
    """Base class for all errors raised by this package."""


class CycleError(IncgradeError):
    """The input relation relates two distinct elements in both directions."""


class DuplicateLabelError(IncgradeError):
    """Two poset elements carry the same label."""


class EmptyPosetError(IncgradeError):
    """An operation that needs a nonempty poset received an empty one."""


class NotComparableError(IncgradeError):
    """A pair (x, y) with x not below y was used where comparability is required."""


class PosetMismatchError(IncgradeError):
    """Two values built over different posets were combined."""


class NotInvertibleError(IncgradeError):
    """An incidence function with a zero diagonal entry cannot be inverted."""


class NotMultiplicativeError(IncgradeError):
    """A function failed the multiplicativity test where one was required."""


class NotAutomorphismError(IncgradeError):
    """A basis-image table does not extend to an algebra automorphism."""


class DecompositionError(IncgradeError):
    """A uniqueness step of the automorphism decomposition failed."""


class InvalidGroupError(IncgradeError):
    """A group specification violates a group axiom or is malformed."""


class MismatchError(IncgradeError):
    """Two gradings over different posets or groups were compared."""


class NotChainTransitiveError(IncgradeError):
    """A check that needs a chain-transitive poset received one that is not."""


class BudgetExceededError(IncgradeError):
    """An enumeration would exceed the configured budget."""


class CapExceededError(IncgradeError):
    """A multidegree is longer than the configured slice degree cap."""


class DegreeMismatchError(IncgradeError):
    """A substitution's multidegree does not match the polynomial's."""


class DimensionMismatchError(IncgradeError):
    """Two matrices with incompatible dimensions were combined."""


class VerificationError(IncgradeError):
    """A cross-check that should always hold failed; indicates a bug."""
