"""Exception types raised by skewpoly.

Every domain error derives from SkewError and carries a stable ``code``
string (used by the CLI for machine-readable error reporting).
"""


class SkewError(Exception):
    """Base class for all domain errors."""

    code = "domain-error"


class FieldMismatchError(SkewError):
    code = "field-mismatch"


class InfiniteFieldError(SkewError):
    code = "infinite-field"


class WrongFieldKindError(SkewError):
    code = "wrong-field-kind"


class ZeroConjugatorError(SkewError):
    code = "zero-conjugator"


class ZeroElementError(SkewError):
    code = "zero-element"


class DivisionByZeroPolynomialError(SkewError):
    code = "division-by-zero-polynomial"


class BothZeroError(SkewError):
    code = "both-zero"


class InvalidAlpha0Error(SkewError):
    code = "invalid-alpha0"


class NotPIndependentError(SkewError):
    code = "not-p-independent"


class ConjugatePairError(SkewError):
    code = "conjugate-pair"


class UndecidableConjugacyError(SkewError):
    code = "undecidable-conjugacy"


class ZeroConstantTermError(SkewError):
    code = "zero-constant-term"


class SeparabilityError(SkewError):
    """The reduced ordinary polynomial was not squarefree.

    This signals an implementation bug: separability is guaranteed for
    every admissible input.
    """

    code = "separability-failure"


class DegreeMismatchError(SkewError):
    code = "degree-mismatch"


class DenominatorNotInSError(SkewError):
    code = "denominator-not-admissible"


class NotMinimalError(SkewError):
    code = "not-minimal"


class ZeroDenominatorError(SkewError):
    code = "zero-denominator"


class UnsplittableDenominatorError(SkewError):
    code = "unsplittable-denominator"


class NegativeValuationError(SkewError):
    code = "negative-valuation"


class ZeroGeneratorError(SkewError):
    code = "zero-generator"


class ParseError(SkewError):
    """Syntax error in a field/element/polynomial literal."""

    code = "syntax-error"

    def __init__(self, message, position=None):
        super().__init__(message if position is None else f"{message} (at position {position})")
        self.position = position


class FieldLiteralError(ParseError):
    code = "field-literal-error"
