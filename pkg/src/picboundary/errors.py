"""Exception hierarchy for picboundary.

Every error raised by the public API derives from PicBoundaryError, so
callers can catch one base class. The CLI maps subfamilies to exit codes:
ParseError -> 2, HypothesisError -> 3, VerificationMismatch -> 4.
"""


class PicBoundaryError(Exception):
    """Base class for all picboundary errors."""


class EmptyGenerators(PicBoundaryError):
    """No generators were supplied for a semigroup."""


class NotCoprime(PicBoundaryError):
    """Generators have gcd > 1, so the complement of the semigroup is infinite."""


class AlreadyNormal(PicBoundaryError):
    """Partial normalization was requested for the full semigroup of naturals."""


class ConductorTooLarge(PicBoundaryError):
    """The semigroup's conductor exceeds MAX_CONDUCTOR (exact-arithmetic guard)."""


class DOutOfRange(PicBoundaryError):
    """Requested module colength d is outside the admissible range."""


class NotContainingConductor(PicBoundaryError):
    """The bounding tail ideal does not contain the conductor ideal."""


class WrongColength(PicBoundaryError):
    """A value set has the wrong colength for the requested operation."""


class NotAUnit(PicBoundaryError):
    """A one-parameter family element has vanishing lowest-order coefficient."""


class RankDrop(PicBoundaryError):
    """A degeneration row became identically zero; the limit is not d-dimensional."""


class NonTermination(PicBoundaryError):
    """The limit iteration exceeded its certified bound (should be unreachable)."""


class HypothesisError(PicBoundaryError):
    """Base for witness-constructor hypothesis failures (CLI exit code 3)."""


class HypothesisFails(HypothesisError):
    """Input does not satisfy the hypothesis of the requested construction."""


class HypothesisNotApplicable(HypothesisError):
    """The construction is vacuous or undefined for this input."""


class PreconditionFailed(HypothesisError):
    """A report operation was invoked outside its stated precondition."""


class VerificationMismatch(PicBoundaryError):
    """A constructed family's computed limit disagrees with its target."""


class ParseError(PicBoundaryError):
    """Malformed textual input (family expressions, value sets, CLI arguments)."""


class ClosureDiagnostic(PicBoundaryError):
    """A fixture's printed value set is not closed under its semigroup.

    Carries the offending set and what is missing so callers can inspect
    or repair. str() renders a one-line report.
    """

    def __init__(self, message, elements=None, missing=None):
        super().__init__(message)
        self.elements = tuple(elements) if elements is not None else ()
        self.missing = tuple(missing) if missing is not None else ()
