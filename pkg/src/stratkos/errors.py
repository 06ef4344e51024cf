"""Error types shared across the toolkit."""


class StratkosError(Exception):
    pass


class NotFiniteDimensional(StratkosError):
    pass


class NonConfluent(StratkosError):
    pass


class InhomogeneousRelation(StratkosError):
    pass


class NotDirected(StratkosError):
    pass


class NotGeneratedDegreeZero(StratkosError):
    pass


class NotQuadratic(StratkosError):
    pass


class LiftFailure(StratkosError):
    pass


class HypothesisFailed(StratkosError):
    pass


class NotStratified(StratkosError):
    pass


class NotFiltered(StratkosError):
    pass


class NotGeneratedInHeight(StratkosError):
    pass


class FieldNotFinite(StratkosError):
    pass


class NotQuasiHereditary(StratkosError):
    pass


class NotSplitField(StratkosError):
    """Raised when a semisimple quotient cannot be split into one-dimensional
    pieces over the chosen coefficient field."""


class SpecFileError(StratkosError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
