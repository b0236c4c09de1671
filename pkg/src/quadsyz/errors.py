"""Exception hierarchy.

Every error carries the CLI exit code it maps to: 2 for malformed input text,
3 for input outside the supported class, 4 for size-cap refusals.
"""


class QuadsyzError(Exception):
    exit_code = 3


class ParseError(QuadsyzError):
    exit_code = 2

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class UnknownVariable(ParseError):
    pass


class SelfLoop(ParseError):
    pass


class DuplicateEdge(ParseError):
    pass


class GeneratorIsUnit(QuadsyzError):
    pass


class EmptyVariableSet(QuadsyzError):
    pass


class NotQuadratic(QuadsyzError):
    def __init__(self, offending):
        self.offending = tuple(offending)
        super().__init__(f"generators of degree != 2: {list(self.offending)}")


class ContainsLinearForm(NotQuadratic):
    pass


class NotSquarefree(QuadsyzError):
    pass


class VertexNotInComplex(QuadsyzError):
    pass


class VoidComplex(QuadsyzError):
    pass


class IncompleteTable(QuadsyzError):
    pass


class SizeCapError(QuadsyzError):
    exit_code = 4


class TooLarge(SizeCapError):
    pass


class TooManyVariables(SizeCapError):
    def __init__(self, n, cap):
        self.n = n
        self.cap = cap
        super().__init__(f"{n} variables exceeds the cap of {cap} for the 2^n subset sweep")


class DegreeCapTooLow(SizeCapError):
    pass
