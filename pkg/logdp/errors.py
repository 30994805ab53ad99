""" Exception hierarchy shared by the logdp modules. """


class LogDPError(ValueError):
    """ Base class for every input error raised by logdp. """
    pass


class ParseError(LogDPError):
    """ Raised when polynomial, diagram or configuration-name text cannot be read. """

    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        if line is not None and column is not None:
            message = "{} (line {}, column {})".format(message, line, column)
        super(ParseError, self).__init__(message)


class VariableMismatchError(LogDPError):
    """ Raised when two polynomials over different variable lists are combined. """
    pass


class DegreeError(LogDPError):
    """ Raised when a degree or homogeneity precondition does not hold. """
    pass


class ClassificationError(LogDPError):
    """ Raised when a germ cannot be classified with the requested precision. """
    pass


class ContradictionError(ClassificationError):
    """ Raised when a classification contradicts a proven structural property. """
    pass


class DiagramError(LogDPError):
    """ Raised for malformed diagrams or diagrams of the wrong shape. """
    pass


class FixtureError(LogDPError):
    """ Raised for missing or malformed fixture files. """
    pass
