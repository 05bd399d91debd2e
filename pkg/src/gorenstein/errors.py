"""Exception hierarchy.

Two families matter to callers. ``InputError`` means the data handed in
was bad (exit code 1 on the command line). ``TheoremViolation`` means a
proven statement failed on our own output, which can only be a bug in
this package (exit code 2).
"""


class GorensteinError(Exception):
    """Base class for all package errors."""


class InputError(GorensteinError):
    pass


class NonLatticeVertex(InputError):
    pass


class RankDeficientLattice(InputError):
    pass


class DegeneratePolytope(InputError):
    pass


class EmptyFace(InputError):
    pass


class UnknownFace(InputError):
    pass


class NotComparable(InputError):
    pass


class NotEulerian(InputError):
    pass


class FacePairInvalid(InputError):
    pass


class NotGorenstein(InputError):
    pass


class NotCayleyJoin(InputError):
    pass


class MixedLattices(InputError):
    pass


class SimplexNotCayleyAligned(InputError):
    pass


class ParseError(InputError):
    def __init__(self, msg: str, line: int | None = None, column: int | None = None):
        loc = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(msg + loc)
        self.line = line
        self.column = column


class ValidationError(InputError):
    pass


class TheoremViolation(GorensteinError):
    """A proven identity or inequality failed; ``module`` names the culprit."""

    module = "unspecified"

    def __init__(self, msg: str, module: str | None = None):
        super().__init__(msg)
        if module is not None:
            self.module = module


class InternalInconsistency(TheoremViolation):
    module = "ehrhart"


class GorensteinHeightViolation(TheoremViolation):
    module = "duality"


class NegativeCoefficient(TheoremViolation):
    module = "stringy"


class NonPolynomialResult(TheoremViolation):
    module = "stringy"
