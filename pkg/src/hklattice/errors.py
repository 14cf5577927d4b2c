"""Exception hierarchy.

Every error raised for a violated precondition derives from
:class:`PreconditionError`; the CLI maps those to exit status 3.
"""


class PreconditionError(ValueError):
    pass


class DimensionMismatch(PreconditionError):
    pass


class NotIsometry(PreconditionError):
    pass


class SquareNotTwo(PreconditionError):
    pass


class NotNegativeDefinite(PreconditionError):
    pass


class EnumerationLimit(PreconditionError):
    pass


class NegativeDim(PreconditionError):
    pass


class AmpleNotPositive(PreconditionError):
    pass


class WrongSignature(PreconditionError):
    pass


class OddSquare(PreconditionError):
    pass


class BetaNotInLambda(PreconditionError):
    pass


class NoSolution(PreconditionError):
    pass


class NotUnique(RuntimeError):
    """More than one involutive beta in the search box; this is a bug."""


class NotSymmetricVector(PreconditionError):
    pass


class NotInWPerp(PreconditionError):
    pass


class NotIndependent(PreconditionError):
    pass


class NotHyperbolic(PreconditionError):
    pass
