"""Exception hierarchy.

Every error carries the CLI exit code it maps to, so the command layer can
translate failures without a lookup table.
"""


class DemcompError(Exception):
    exit_code = 1


class InputError(DemcompError, ValueError):
    exit_code = 2


class ParseError(InputError):
    def __init__(self, message, row=None, col=None):
        self.row = row
        self.col = col
        if row is not None:
            where = f"row {row}" if col is None else f"row {row}, column {col}"
            message = f"{where}: {message}"
        super().__init__(message)


class MismatchedMirror(ParseError):
    pass


class AsymmetricPattern(InputError):
    pass


class NonReciprocal(InputError):
    pass


class NonPositive(InputError):
    pass


class ZeroMatrix(InputError):
    pass


class Disconnected(DemcompError):
    exit_code = 3

    def __init__(self, components, labels=None):
        self.components = [list(c) for c in components]
        names = labels if labels is not None else [str(i) for i in range(sum(map(len, components)))]
        parts = ", ".join("{" + ", ".join(names[i] for i in comp) + "}" for comp in self.components)
        super().__init__(f"comparison graph is disconnected: components {parts}")


class NumericalError(DemcompError, ArithmeticError):
    exit_code = 4


class SingularMatrix(NumericalError):
    pass


class NoConvergence(NumericalError):
    pass


class NonConvergent(NumericalError):
    pass


class ZeroTotalRelation(NumericalError):
    pass


class MaskError(DemcompError):
    exit_code = 5
