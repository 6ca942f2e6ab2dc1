"""Exception hierarchy shared by every module."""


class AsmtourError(Exception):
    """Base class for all library errors."""


class InputError(AsmtourError, ValueError):
    """Malformed or out-of-contract input; the CLI maps these to exit code 2."""


class NotSquare(InputError):
    pass


class EntryOutOfRange(InputError):
    pass


class RowColumnConstraintViolated(InputError):
    def __init__(self, axis, index, message):
        super().__init__(message)
        self.axis = axis
        self.index = index


class InvalidCmt(InputError):
    pass


class InvalidTriangle(InputError):
    pass


class MixedRow(InputError):
    def __init__(self, row, message):
        super().__init__(message)
        self.row = row


class RankMismatch(InputError):
    def __init__(self, row, message):
        super().__init__(message)
        self.row = row


class NotPureX(InputError):
    pass


class NotPureV(InputError):
    pass


class NotAdmissible(InputError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class NonStandardBottomRow(InputError):
    pass


class OrderMismatch(InputError):
    pass


class OrderTooLarge(InputError):
    pass


class NotApplicable(AsmtourError):
    """A raising/lowering operator was asked to act where its precondition fails."""

    def __init__(self, op, d, clause):
        super().__init__(f"{op}_{d} not applicable: {clause}")
        self.op = op
        self.d = d
        self.clause = clause


class InvariantBreach(AsmtourError):
    """Something the mathematics guarantees did not hold. Always a bug."""


class IndexOverflow(InvariantBreach):
    pass


class NonIntegralProduct(InvariantBreach):
    pass
