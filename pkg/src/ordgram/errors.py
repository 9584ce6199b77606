"""Exception hierarchy shared by the pipeline.

Every error the CLI turns into exit code 2 derives from :class:`OrdgramError`.
"""


class OrdgramError(Exception):
    pass


class OrdinalOverflow(OrdgramError, OverflowError):
    pass


class OrdinalDomainError(OrdgramError, ValueError):
    pass


class ParseError(OrdgramError, ValueError):
    def __init__(self, message, line=None, position=None):
        self.line = line
        self.position = position
        where = ""
        if line is not None:
            where = f"line {line}: "
        elif position is not None:
            where = f"position {position}: "
        super().__init__(where + message)


class GrammarError(OrdgramError, ValueError):
    """Structurally invalid grammar (undeclared symbols, bad start)."""


class BudgetExceeded(OrdgramError, RuntimeError):
    pass


class NotAnOrdinalGrammar(OrdgramError):
    """The input provably violates a necessary property of ordinal grammars."""


class LeftRecursionDetected(NotAnOrdinalGrammar):
    pass


class ShapeViolation(NotAnOrdinalGrammar):
    pass


class PrefixViolation(NotAnOrdinalGrammar):
    pass


class NotWellOrdered(NotAnOrdinalGrammar):
    pass


class BoundViolation(OrdgramError):
    """A computed order type is not below w^(w^w)."""
