"""Exception types raised by the library.

Every domain error derives from :class:`LorenzError`; the CLI maps these to
exit code 2 and prints the class name on standard error.
"""

from __future__ import annotations


class LorenzError(ValueError):
    """Base class for domain errors."""


class InvalidWord(LorenzError):
    """Text that does not parse as a word of the expected alphabet."""


class PeriodicWord(LorenzError):
    """A word of the form u^k with k >= 2 where a primitive word is required."""


class DegenerateWord(LorenzError):
    """A one-letter word passed to an operation that needs both letters."""


class NotCoprime(LorenzError):
    pass


class NonPositiveInput(LorenzError):
    """A braid containing a negative generator where a positive braid is required."""


class BoundMismatch(LorenzError):
    """The MFW lower bound disagrees with the trip; indicates an internal bug."""


class NotHyperbolic(LorenzError):
    pass


class NegativeTrace(LorenzError):
    pass


class NotPrimitive(LorenzError):
    """The matrix or word is a proper power u^k, k >= 2."""


class NotAnnihilated(LorenzError):
    """The matrix does not satisfy x^2 - t x + 1 = 0 for the order's trace."""


class NotAnIdeal(LorenzError):
    """A lattice that is not stable under multiplication by alpha."""


class NotAKnot(LorenzError):
    """A diagram or permutation whose closure has more than one component."""


class InvalidDiagram(LorenzError):
    pass
