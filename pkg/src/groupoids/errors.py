"""Exception hierarchy.

Every error carries a ``witness`` dict naming the offending identifiers, and
renders as ``ClassName key=value ...`` so CLI output stays one line per error.
"""

from __future__ import annotations


class GroupoidError(Exception):
    def __init__(self, message: str = "", **witness):
        self.message = message
        self.witness = witness
        super().__init__(str(self))

    def __str__(self) -> str:
        parts = [type(self).__name__]
        parts += [f"{k}={_fmt(v)}" for k, v in self.witness.items()]
        if self.message:
            parts.append(f"({self.message})")
        return " ".join(parts)


def _fmt(v) -> str:
    # late import: textio depends on this module
    from .textio import token

    try:
        return token(v)
    except Exception:
        return repr(v)


class ValidationError(GroupoidError):
    """A raw table violates one of the groupoid axioms."""


class IdentifierError(ValidationError):
    pass


class DomainError(ValidationError):
    pass


class AssociativityError(ValidationError):
    pass


class IdentityError(ValidationError):
    pass


class InverseError(ValidationError):
    pass


class EmptyBase(GroupoidError):
    pass


class NotAGroup(GroupoidError):
    pass


class NotAnAction(GroupoidError):
    pass


class NotAPartition(GroupoidError):
    pass


class ObjectNotFound(GroupoidError):
    pass


class OrderTooLarge(GroupoidError):
    def __init__(self, order: int, abelian: bool):
        self.order = order
        self.abelian = abelian
        super().__init__(order=order, abelian=abelian)


class NotAMorphism(GroupoidError):
    pass


class ShapeMismatch(GroupoidError):
    pass


class NotHomotopic(GroupoidError):
    pass


class SearchTooLarge(GroupoidError):
    pass


class GroupoidMismatch(GroupoidError):
    pass


class NotAPairGroupoid(GroupoidError):
    pass


class PointOutsideB(GroupoidError):
    pass


class NotALatticePoint(GroupoidError):
    pass


class FormatError(GroupoidError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is None:
            super().__init__(message)
        else:
            super().__init__(message, line=line)
