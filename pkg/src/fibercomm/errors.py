"""Exception types shared across the toolkit.

Every domain-level failure derives from :class:`DomainError` and carries a
stable machine-readable ``code``.  The command-line layer maps any
``DomainError`` to exit status 1 and prints the code, so the strings here are
part of the public interface and must not be renamed casually.
"""


class DomainError(Exception):
    """Base class for domain failures (CLI exit status 1)."""

    code = "domain-error"


class ZeroClass(DomainError):
    """A cohomology class required to be nonzero was zero."""

    code = "zero-class"


class ArityMismatch(DomainError):
    """Polynomial arity does not match the class or the other operand."""

    code = "arity-mismatch"


class ZeroPolynomial(DomainError):
    """The zero polynomial has no Newton polytope and no roots."""

    code = "zero-polynomial"


class NoRootAboveOne(DomainError):
    """The polynomial has no real root strictly greater than one."""

    code = "no-root-above-one"


class Unsupported(DomainError):
    """Requested an operation outside the supported parameter range."""

    code = "unsupported"


class DimensionMismatch(DomainError):
    """Vector length does not match the ambient rank."""

    code = "dimension-mismatch"


class DegenerateNorm(DomainError):
    """Every dual vertex is zero; the norm carries no face structure."""

    code = "degenerate-norm"


class UnboundedCone(DomainError):
    """A cone section at fixed norm is unbounded (bad ball data)."""

    code = "unbounded-cone"


class MissingPolynomial(DomainError):
    """The face carries no dilatation polynomial."""

    code = "missing-polynomial"


class NotInCone(DomainError):
    """The class is not in the open cone over the face."""

    code = "not-in-cone"


class NotPrimitive(DomainError):
    """The class is not primitive (coordinate gcd differs from one)."""

    code = "not-primitive"


class NotOnFace(DomainError):
    """The point does not lie in the open face at norm one."""

    code = "not-on-face"


class OrbitOverflow(DomainError):
    """Symmetry orbit exceeded the configured bound."""

    code = "orbit-overflow"


class HypothesisUnmet(DomainError):
    """A construction's hypothesis (e.g. conjugate monodromies) fails."""

    code = "hypothesis-unmet"


class ParseError(DomainError):
    """Descriptor input could not be parsed; message carries the position."""

    code = "parse-error"


class ValidationError(DomainError):
    """Descriptor or type invariant violated; message names the invariant."""

    code = "validation-error"
