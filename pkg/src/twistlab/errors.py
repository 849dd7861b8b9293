"""Exception hierarchy.

Every domain error derives from :class:`TwistlabError`.  Bounded searches that
run out of radius raise :class:`Inconclusive` subclasses; callers (and the CLI)
treat those differently from genuine refutations.
"""


class TwistlabError(Exception):
    pass


class ParseError(TwistlabError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column or 1}: {message}"
        super().__init__(message)


class InvalidMatrix(TwistlabError, ValueError):
    pass


class InvalidSubset(TwistlabError, ValueError):
    pass


class PreconditionError(TwistlabError, ValueError):
    pass


class NotSpherical(PreconditionError):
    pass


class NotFC(PreconditionError):
    pass


class MatrixMismatch(TwistlabError, ValueError):
    pass


class ValidationFailed(TwistlabError):
    def __init__(self, clause, message):
        self.clause = clause
        super().__init__(f"clause {clause}: {message}")


class NoValidOrdering(TwistlabError):
    pass


class WallsNotDisjoint(TwistlabError):
    pass


class InconsistentClass(TwistlabError):
    pass


class WitnessDisagreement(TwistlabError):
    pass


class InvalidMove(TwistlabError, ValueError):
    pass


class StepBudgetExceeded(TwistlabError):
    pass


class Inconclusive(TwistlabError):
    """A radius- or cutoff-bounded computation could not decide."""


class NotFoundWithinRadius(Inconclusive):
    pass


class ConjugatorNotFoundWithinRadius(NotFoundWithinRadius):
    pass
