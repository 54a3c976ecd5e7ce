"""Exception hierarchy shared by every module in the package."""


class SalemTraceError(Exception):
    pass


class NotDivisible(SalemTraceError, ArithmeticError):
    pass


class PreconditionFailed(SalemTraceError, ValueError):
    pass


class NotInterlacing(SalemTraceError, ValueError):
    """A pair failed circular-interlacing verification.

    ``witness`` holds whatever concrete object exposed the failure
    (a polynomial, a root location, a residue index).
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotOnCircle(NotInterlacing):
    pass


class NotSimple(NotInterlacing):
    pass


class NotAlternating(NotInterlacing):
    pass


class Inconclusive(SalemTraceError):
    pass


class OddN(SalemTraceError, ValueError):
    pass


class NotCoprime(SalemTraceError, ValueError):
    pass


class BadParam(SalemTraceError, ValueError):
    pass


class NotReciprocal(SalemTraceError, ValueError):
    pass


class OddDegree(SalemTraceError, ValueError):
    pass


class EndpointIsRoot(SalemTraceError, ValueError):
    pass


class BadTrace(SalemTraceError, ValueError):
    pass


class TooLarge(SalemTraceError, ValueError):
    pass


class NotMaterializable(SalemTraceError):
    pass


class ParseError(SalemTraceError, ValueError):
    def __init__(self, message, line=None, offset=None):
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", offset {offset})" if offset is not None else ")")
        super().__init__(message + where)
        self.line = line
        self.offset = offset
