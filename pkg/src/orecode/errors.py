"""Exception hierarchy shared by every module.

Each error carries the process exit code the CLI should use: 2 for invalid
input, 3 for an exceeded cap, 1 for internal failures.
"""

from __future__ import annotations


class OrecodeError(Exception):
    exit_code = 2


class InvalidModulus(OrecodeError):
    pass


class InvalidCharacteristic(OrecodeError):
    pass


class FieldMismatch(OrecodeError):
    pass


class DivisionByZero(OrecodeError):
    pass


class ContextMismatch(OrecodeError):
    pass


class Undefined(OrecodeError):
    pass


class CapExceeded(OrecodeError):
    exit_code = 3


class InvalidScale(OrecodeError):
    pass


class InvalidArgument(OrecodeError):
    pass


class NotClosed(OrecodeError):
    pass


class InternalError(OrecodeError):
    exit_code = 1


class NotRightDivisor(OrecodeError):
    pass


class EmptyCode(OrecodeError):
    pass


class DegreeTooLarge(OrecodeError):
    pass


class LengthMismatch(OrecodeError):
    pass


class ShapeMismatch(OrecodeError):
    pass


class SupportMismatch(OrecodeError):
    pass


class ParseError(OrecodeError):
    pass
