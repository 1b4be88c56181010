"""Exception hierarchy shared by every subpackage."""


class NeutroError(Exception):
    """Base class for all library errors."""


class DomainError(NeutroError, ValueError):
    """A value lies outside its admissible domain (e.g. not in [0, 1])."""


class UniverseMismatch(NeutroError, ValueError):
    """Two set operands are defined over different universes."""


class SchemeError(NeutroError, ValueError):
    """Relation schemes are incompatible or a tuple does not conform."""


class EvaluationError(NeutroError):
    """Evaluation failed: unbound name, arity mismatch, size guard, ..."""


class NoOutputError(EvaluationError):
    """The inference pipeline produced an all-zero output curve."""


class NoRuleFired(EvaluationError):
    """Aggregated truth is identically zero: no rule contributed."""


class ParseError(NeutroError, ValueError):
    """Malformed text input.  Carries a 1-based line/column when known."""

    def __init__(self, message, line=None, col=None, source=None):
        self.message = message
        self.line = line
        self.col = col
        self.source = source
        super().__init__(self.describe())

    def describe(self):
        where = ""
        if self.source:
            where += f"{self.source}:"
        if self.line is not None:
            where += f"{self.line}:"
            if self.col is not None:
                where += f"{self.col}:"
        return f"{where} {self.message}".strip() if where else self.message
