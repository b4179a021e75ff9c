"""Exception families shared across graphflow. Each top level family maps to
one process exit code in the command line front end."""


class GraphflowException(Exception):
    pass


class InputException(GraphflowException):
    pass


class ResourceGuardError(GraphflowException):
    def __init__(self, what, value, limit):
        super().__init__('{} = {} exceeds the configured limit {}'.format(what, value, limit))
        self.what, self.value, self.limit = what, value, limit


class NoSolution(GraphflowException):
    pass


# Graph structure
class StructuralInputError(InputException):
    pass


class TadpoleError(StructuralInputError):
    pass


class RepeatedEdgeError(StructuralInputError):
    pass


class VertexIndexError(StructuralInputError):
    pass


class CocycleValidationError(InputException):
    pass


# Graded algebra
class DimensionMismatchError(InputException):
    pass


class DegreeError(InputException):
    pass


class UnboundSymbolError(InputException):
    pass


class MalformedLeibnizGraph(StructuralInputError):
    pass


# Models and expressions
class ModelError(InputException):
    pass


class ExpressionSyntaxError(InputException):
    def __init__(self, message, position=None):
        if position is not None:
            message = '{} (at position {})'.format(message, position)
        super().__init__(message)
        self.position = position


class UnknownSymbolError(ExpressionSyntaxError):
    pass


class NonPolynomialError(ExpressionSyntaxError):
    pass


class FormatError(InputException):
    pass
