from __future__ import annotations


class QuivError(Exception):
    """Root of every error raised by the quiv modules."""


class DomainMismatch(QuivError, ValueError):
    pass


class ConstraintError(QuivError, ValueError):
    pass


class SquareViolation(QuivError):
    def __init__(self, edge: str, which: str, lhs: str, rhs: str) -> None:
        self.edge = edge
        self.which = which  # source|target
        self.lhs = lhs
        self.rhs = rhs
        super().__init__(
            f"{which} square fails at edge {edge!r}: "
            f"vertex map gives {lhs!r}, edge map gives {rhs!r}"
        )


class CapExceeded(QuivError):
    def __init__(self, what: str, size: int, cap: int) -> None:
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"search space too large ({what}): {size} > {cap}")


class LawViolation(QuivError):
    def __init__(self, law: str, instance: str, lhs: object = None, rhs: object = None) -> None:
        self.law = law
        self.instance = instance
        self.lhs = lhs
        self.rhs = rhs
        msg = f"law {law!r} fails at {instance}"
        if lhs is not None or rhs is not None:
            msg += f": {lhs} != {rhs}"
        super().__init__(msg)


class ParseError(QuivError, ValueError):
    def __init__(self, message: str, line: int, column: int = 1) -> None:
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")
