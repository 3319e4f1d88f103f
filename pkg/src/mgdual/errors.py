"""Exception hierarchy shared by every module of the package."""


class MgDualError(Exception):
    """Base class for all package errors."""


class DimensionMismatch(MgDualError, ValueError):
    pass


class NotPointed(MgDualError, ValueError):
    """The grading has a non-constant degree-zero polynomial (weight cone contains a line)."""


class InvalidB(MgDualError, ValueError):
    pass


class NotInSemigroup(MgDualError, ValueError):
    pass


class AmbientMismatch(MgDualError, ValueError):
    pass


class NotHomogeneous(MgDualError, ValueError):
    pass


class ZeroPolynomial(MgDualError, ValueError):
    pass


class IndexOutOfRange(MgDualError, IndexError):
    pass


class MissingPrerequisite(MgDualError, RuntimeError):
    """A dual space of a smaller degree was not memoized before it was needed."""


class GradingMismatch(MgDualError, ValueError):
    pass


class WindowEmpty(MgDualError, ValueError):
    pass


class ParseError(MgDualError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class UnknownVariable(ParseError):
    pass


class NonHomogeneousGenerator(MgDualError, ValueError):
    def __init__(self, ideal, index, text, degrees):
        self.ideal = ideal
        self.index = index
        self.text = text
        self.degrees = degrees
        shown = ", ".join(str(tuple(d)) for d in degrees)
        super().__init__(
            f"generator {index + 1} of ideal {ideal!r} ({text}) is not homogeneous; "
            f"term degrees: {shown}"
        )
