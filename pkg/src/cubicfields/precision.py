"""Arbitrary-precision substrate and branch conventions.

Every numeric operation in this package runs inside an mpmath context
created from a :class:`PrecisionPolicy`.  A policy fixes the number of
decimal digits a result must be good to (``target_digits``) plus guard
digits that absorb cancellation; there is no ambient global precision
state.  Contexts are created fresh per call and never mutated after
creation, so everything here is safe for unrestricted concurrent use.

Two branch conventions live here because the whole package depends on
them: cube roots of negative reals take the real branch, and the
two-argument arctangent returns sign(num) * pi/2 when the denominator
vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from mpmath.ctx_mp import MPContext
from mpmath.libmp import to_rational

from .errors import DegenerateAngle

DEFAULT_GUARD_DIGITS = 20
_MIN_WORKING_DIGITS = 10


@dataclass(frozen=True)
class PrecisionPolicy:
    """Target decimal digits plus guard digits of working precision.

    Equality assertions made under a policy compare at ``target_digits``:
    |a - b| < 10**(-target_digits), while all arithmetic runs at
    ``working_digits`` = target + guard.
    """

    target_digits: int
    guard_digits: int = DEFAULT_GUARD_DIGITS

    def __post_init__(self):
        if self.target_digits < 1:
            raise ValueError("target_digits must be positive")
        if self.guard_digits < 0:
            raise ValueError("guard_digits must be nonnegative")
        if self.working_digits < _MIN_WORKING_DIGITS:
            raise ValueError(f"working precision must be >= {_MIN_WORKING_DIGITS} digits")

    @property
    def working_digits(self) -> int:
        return self.target_digits + self.guard_digits

    def context(self) -> MPContext:
        """Fresh mpmath context at working precision.

        The returned context is owned by the caller; nothing else holds a
        reference to it, and callers must not change its ``dps``.
        """
        ctx = MPContext()
        ctx.dps = self.working_digits
        return ctx

    def tolerance(self, ctx: MPContext):
        """10**(-target_digits) as an mpf in ctx."""
        return ctx.mpf(10) ** (-self.target_digits)

    def agrees(self, a, b, ctx: MPContext) -> bool:
        """|a - b| < 10**(-target_digits)."""
        return abs(ctx.convert(a) - ctx.convert(b)) < self.tolerance(ctx)


def to_mpf(value, ctx: MPContext):
    """Convert ints, Fractions, floats, decimal strings, or mpfs to an mpf
    rounded once at ctx's working precision."""
    return ctx.convert(value)


def mpf_to_fraction(x) -> Fraction:
    """Exact rational value of a finite mpf (denominator a power of two)."""
    num, den = to_rational(x._mpf_)
    return Fraction(int(num), int(den))


def real_cbrt(x, ctx: MPContext):
    """Real-branch cube root: sign(x) * |x|**(1/3).

    This is the convention that makes the cube-root coefficient relation
    hold for cubics with negative constant term, e.g. r = -1.
    """
    x = ctx.convert(x)
    if x < 0:
        return -ctx.cbrt(-x)
    return ctx.cbrt(x)


def branch_arctan(num, den, ctx: MPContext):
    """arctan(num/den) in (-pi/2, pi/2), with sign(num)*pi/2 when den = 0.

    For den < 0 this is still the principal arctangent of the quotient
    (not atan2); callers split on the sign of den themselves, which is
    how the trigonometric root formulas are stated.
    """
    num = ctx.convert(num)
    den = ctx.convert(den)
    if den == 0:
        if num == 0:
            raise DegenerateAngle("arctan undefined: both arguments zero")
        half_pi = +ctx.pi / 2
        return half_pi if num > 0 else -half_pi
    return ctx.atan(num / den)
