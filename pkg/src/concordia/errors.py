"""Exception hierarchy shared by every module.

The CLI maps families of these onto process exit codes, so each class
carries an ``exit_code`` attribute.
"""


class ConcordiaError(Exception):
    exit_code = 1


class ParseError(ConcordiaError):
    exit_code = 2

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


# -- singular evaluations (exit 3) -------------------------------------------

class SingularError(ConcordiaError):
    exit_code = 3


class SingularAtSample(SingularError):
    def __init__(self, a, b, message=None):
        self.a, self.b = a, b
        super().__init__(message or f"form is singular at omega = exp(2 pi i {a}/{b})")


class SingularAtRoot(SingularAtSample):
    def __init__(self, a, b):
        super().__init__(a, b, f"omega = exp(2 pi i {a}/{b}) is a root of the Alexander polynomial")


class SingularForm(SingularError):
    pass


class SingularBaseChange(SingularError):
    pass


class SingularIntermediate(SingularError):
    pass


class PrecisionExhausted(SingularError):
    pass


# -- precondition / contract failures (exit 4) -------------------------------

class PreconditionFailed(ConcordiaError):
    exit_code = 4


class NotSymmetric(PreconditionFailed):
    pass


class NotInImage(PreconditionFailed):
    pass


class NotSeifert(PreconditionFailed):
    def __init__(self, determinant):
        self.determinant = determinant
        super().__init__(f"det(V - V^t) = {determinant}, expected +1 or -1")


class InvalidBlock(PreconditionFailed):
    pass


class EquivarianceViolated(PreconditionFailed):
    pass


class DimensionMismatch(PreconditionFailed):
    pass


class NotPrimePower(PreconditionFailed):
    pass


class NotInvertibleModP(PreconditionFailed):
    pass


class NotElementaryAbelian(PreconditionFailed):
    pass


class TooLarge(PreconditionFailed):
    pass


class OddRank(PreconditionFailed):
    pass


class ChainMismatch(PreconditionFailed):
    pass


class BadFamily(PreconditionFailed):
    pass


# -- internal consistency (exit 5) -------------------------------------------

class OracleMismatch(ConcordiaError):
    exit_code = 5


class IdentityFailure(OracleMismatch):
    def __init__(self, identity, detail=""):
        self.identity = identity
        super().__init__(f"identity ({identity}) failed" + (f": {detail}" if detail else ""))
