"""Exception types shared by every subsystem.

All toolkit errors derive from :class:`AlgSeriesError` so callers (and the
CLI) can catch one base class and map it to an exit status.
"""


class AlgSeriesError(Exception):
    """Base class for all toolkit errors."""


class ZeroDenominator(AlgSeriesError):
    """A rational function was built with a zero denominator."""


class ZeroConstantTerm(AlgSeriesError):
    """A series expansion needs an invertible constant term and got none."""


class InsufficientPrecision(AlgSeriesError):
    """A truncated series is too short for the requested operation."""


class HypothesisViolated(AlgSeriesError):
    """Input does not satisfy the hypotheses of the construction."""


class DigitOutOfRange(AlgSeriesError):
    """A digit-section operator received a digit outside 0..q-1."""


class InfiniteField(AlgSeriesError):
    """An operation defined only over finite fields was given the rationals."""


class StateBudgetExceeded(AlgSeriesError):
    """A kernel closure grew past its state cap (guards implementation bugs)."""


class BaseMismatch(AlgSeriesError):
    """Automaton digit base and field cardinality disagree."""


class DegreeBlowup(AlgSeriesError):
    """Kernel is too large for exact elimination (degrees grow like q^d)."""


class NoRelation(AlgSeriesError):
    """No annihilating relation was found; internal error for valid inputs."""


class DegenerateReduction(AlgSeriesError):
    """P(0, Y) vanishes identically, so residue roots are undefined."""


class NonSimpleRoot(AlgSeriesError):
    """Newton lifting requires a simple residue root."""


class NotSquarefree(AlgSeriesError):
    """The polynomial has a repeated factor in Y."""


class ZeroA0(AlgSeriesError):
    """Every dependency lacks the k=0 term; relations with a shift l > 0
    are carried by the data type but never synthesized."""


class NegativeValuation(AlgSeriesError):
    """A state that should be a power series evaluated to a genuine Laurent
    series; indicates an internal inconsistency."""


class SchemaError(AlgSeriesError):
    """Malformed automaton JSON; ``path`` points at the offending node."""

    def __init__(self, path, message):
        super().__init__(f"{path}: {message}")
        self.path = path
        self.reason = message


class ParseError(AlgSeriesError):
    """Syntax error in a polynomial expression; ``offset`` is a position
    inside the input string."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class NegativeExponent(ParseError):
    """Exponents must be nonnegative integer literals."""


class UnknownSymbol(ParseError):
    """Only the declared variables may appear in an expression."""
