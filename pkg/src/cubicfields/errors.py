"""Exception types shared across the package."""


class CubicFieldsError(Exception):
    """Base class for all errors raised by this package."""


class DegenerateAngle(CubicFieldsError):
    """Both arguments of a two-argument arctangent are zero."""


class InvalidScale(CubicFieldsError):
    """The scale parameter s of a cubic family is zero."""


class NotAnRcp(CubicFieldsError):
    """Coefficients do not satisfy the cube-root coefficient relation."""


class DegenerateGamma(CubicFieldsError):
    """The product-form parameter gamma hit an excluded value (1 or 2)."""


class NotCubic(CubicFieldsError):
    """Leading coefficient is zero."""


class NotThreeRealRoots(CubicFieldsError):
    """The cubic does not have three distinct real roots."""


class PoleOfTransform(CubicFieldsError):
    """Argument is a fixed pole of the order-3 transform (z = 0 or z = s)."""


class AmbiguousMatch(CubicFieldsError):
    """Two zeros are equidistant from the matching target within tolerance."""


class NotPrime(CubicFieldsError):
    """The modulus is not a prime number."""


class NoCubicCosets(CubicFieldsError):
    """p is not congruent to 1 mod 3, so the cubes have no index-3 cosets."""


class NotShanksPrime(CubicFieldsError):
    """p is not of the form h^2+3h+9 for an admissible integer h."""


class NotLehmerCase(CubicFieldsError):
    """h is divisible by 3, outside the period-correspondence cases."""


class UnknownIdentity(CubicFieldsError):
    """Requested name is not in the identity catalog."""


class EvaluationDomainError(CubicFieldsError):
    """Expression evaluation hit a domain error (sqrt of a negative,
    division by zero, zero to a negative power)."""


class PrecisionExhausted(CubicFieldsError):
    """Working precision is too low to round a value to an integer with
    certainty; retry with more digits."""


class ParseError(CubicFieldsError):
    """Syntax error in the expression DSL.

    Carries the byte offset of the failure and the set of token kinds
    that would have been accepted there.
    """

    def __init__(self, offset: int, expected: tuple[str, ...], message: str | None = None):
        self.offset = offset
        self.expected = tuple(expected)
        if message is None:
            message = f"syntax error at offset {offset}: expected {' or '.join(self.expected)}"
        super().__init__(message)


class OfflineMiss(CubicFieldsError):
    """No cached copy, no bundled fixture, and the download failed."""


class BFileFormatError(CubicFieldsError):
    """A b-file did not conform to the 'n a(n)' line format."""
