"""Exception hierarchy.

Every error carries an ``exit_code`` so the CLI can map failures without a
lookup table: 2 for malformed input, 3 for infeasibility or a violated
precondition, 4 for a failed verification.
"""


class ScgtError(Exception):
    exit_code = 1


class InputError(ScgtError, ValueError):
    exit_code = 2


class VertexOutOfRangeError(InputError):
    def __init__(self, face, n):
        self.face = tuple(face)
        self.n = n
        super().__init__(f"face {list(self.face)} has a vertex outside [1, {n}]")


class ConstraintViolation(InputError):
    """A worth function assigned a nonzero value to the empty coalition."""


class DimensionMismatch(InputError):
    pass


class PreconditionError(ScgtError):
    exit_code = 3


class InfeasibleCoalitionError(PreconditionError, KeyError):
    def __init__(self, face, what="coalition"):
        self.face = tuple(face)
        super().__init__(f"infeasible {what}: {list(self.face)} is not a face of the complex")

    def __str__(self):
        return self.args[0]


class ComplexMismatchError(PreconditionError):
    pass


class PurityRequiredError(PreconditionError):
    pass


class ClassicalGameRequired(PreconditionError):
    pass


class ScaleLimitError(PreconditionError):
    pass


class NotAMatroidError(PreconditionError):
    pass


class DummyPreconditionError(PreconditionError):
    """The game handed to the dummy-axiom checker does not make the player dummy."""


class EmptyDecompositionError(PreconditionError):
    """A zero-rate value has no facet decomposition."""


class NotRepresentableError(PreconditionError):
    """A linear value is not of the link-coefficient form."""


class NotMonotoneRepresentable(NotRepresentableError):
    pass


class NecessaryConditionViolation(NotRepresentableError):
    pass


class NotReducibleError(PreconditionError):
    pass


class VerificationFailed(ScgtError):
    exit_code = 4
