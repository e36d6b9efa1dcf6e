"""Exception hierarchy.  Every error carries a machine-readable ``code``."""


class JacsysError(Exception):
    code = "domain-error"

    def __init__(self, message, **details):
        super().__init__(message)
        self.details = details


class InvalidParameterError(JacsysError):
    code = "invalid-parameter"


class DivisibleDegreesError(JacsysError):
    """Raised when one of n, m divides the other: such systems have no solution."""

    code = "divisible-degrees"


class NothingToEliminateError(JacsysError):
    code = "nothing-to-eliminate"


class TruncationError(JacsysError):
    code = "insufficient-truncation"


class NotInvertibleError(JacsysError):
    code = "not-invertible"

    def __init__(self, message, factor=None):
        super().__init__(message, factor=factor)
        self.factor = factor


class ModulusMismatchError(JacsysError):
    code = "modulus-mismatch"


class RootFindingError(JacsysError):
    code = "no-convergence"

    def __init__(self, message, partial=None):
        super().__init__(message, partial=partial)
        self.partial = partial


class EliminationError(JacsysError):
    code = "zero-eliminant"


class ScaleError(JacsysError):
    code = "scale-bound"


class NotASolutionError(JacsysError):
    code = "not-a-solution"


class ParseError(JacsysError):
    code = "parse-error"


class DegreeCapError(JacsysError):
    code = "degree-cap"
