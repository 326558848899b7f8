"""Cubic polynomials with cyclically related zeros.

Two equivalent parametrizations are implemented: the coefficient test
p*r^(1/3) + 3*r^(2/3) + q = 0 (real-branch roots) and the (h, s) family

    rho(h, s, x) = x^3 + h*s*x^2 - (h+3)*s^2*x + s^3,   s != 0.

The s = -1 slice x^3 - h*x^2 - (h+3)*x - 1 generates cyclic cubic fields
and is the backbone of the period and sequence modules.  Coefficients stay
exact (int/Fraction) whenever the inputs are exact; irrational inputs ride
on mpf values created by the caller's precision policy.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateGamma, InvalidScale, NotAnRcp, NotCubic
from .precision import PrecisionPolicy, real_cbrt


def _is_exact(value) -> bool:
    return isinstance(value, (int, Fraction))


def _icbrt(n: int) -> int:
    """Floor cube root of n >= 0 by integer Newton iteration."""
    if n == 0:
        return 0
    x = 1 << ((n.bit_length() + 2) // 3)
    while True:
        y = (2 * x + n // (x * x)) // 3
        if y >= x:
            return x
        x = y


def _rational_cbrt(value: Fraction) -> Fraction | None:
    """Exact cube root of a rational, or None if it is not a perfect cube."""
    value = Fraction(value)
    sign = -1 if value < 0 else 1
    num, den = abs(value.numerator), value.denominator
    rn, rd = _icbrt(num), _icbrt(den)
    if rn**3 == num and rd**3 == den:
        return Fraction(sign * rn, rd)
    return None


@dataclass(frozen=True)
class Cubic:
    """A cubic a3*x^3 + a2*x^2 + a1*x + a0 by its four coefficients."""

    a3: object
    a2: object
    a1: object
    a0: object

    def __post_init__(self):
        if self.a3 == 0:
            raise NotCubic("leading coefficient is zero")

    @property
    def coefficients(self):
        return (self.a3, self.a2, self.a1, self.a0)

    @property
    def is_exact(self) -> bool:
        return all(_is_exact(c) for c in self.coefficients)

    def monic_normalize(self) -> "Cubic":
        """Divide through by the leading coefficient (idempotent)."""
        if self.a3 == 1:
            return self
        a3 = Fraction(self.a3) if _is_exact(self.a3) else self.a3
        return Cubic(1, self.a2 / a3, self.a1 / a3, self.a0 / a3)

    def evaluate(self, x, ctx=None):
        """Horner evaluation.  With a ctx, everything is converted to mpf
        at its working precision; without one, inputs must be exact."""
        if ctx is not None:
            a3, a2, a1, a0 = (ctx.convert(c) for c in self.coefficients)
            x = ctx.convert(x)
            return ((a3 * x + a2) * x + a1) * x + a0
        if not (self.is_exact and _is_exact(x)):
            raise TypeError("inexact coefficients or argument require a context")
        return ((self.a3 * x + self.a2) * x + self.a1) * x + self.a0

    def discriminant(self):
        """18*a*b*c*d - 4*b^3*d + b^2*c^2 - 4*a*c^3 - 27*a^2*d^2.

        Positive exactly when there are three distinct real roots."""
        a, b, c, d = self.coefficients
        return (
            18 * a * b * c * d
            - 4 * b**3 * d
            + b**2 * c**2
            - 4 * a * c**3
            - 27 * a**2 * d**2
        )

    def __str__(self) -> str:
        parts = []
        for coeff, power in zip(self.coefficients, (3, 2, 1, 0)):
            if coeff == 0:
                continue
            mag = abs(coeff) if _is_exact(coeff) else coeff
            sign = "-" if (_is_exact(coeff) and coeff < 0) else "+"
            if power == 0:
                term = f"{mag}"
            else:
                x = "x" if power == 1 else f"x^{power}"
                term = x if mag == 1 else f"{mag}*{x}"
            parts.append((sign, term))
        if not parts:
            return "0"
        first_sign, first_term = parts[0]
        text = ("-" if first_sign == "-" else "") + first_term
        for sign, term in parts[1:]:
            text += f" {sign} {term}"
        return text


@dataclass(frozen=True)
class RcpParams:
    """The (h, s) parameters inducing p = h*s, q = -(h+3)*s^2, r = s^3."""

    h: object
    s: object

    def __post_init__(self):
        if self.s == 0:
            raise InvalidScale("s must be nonzero")

    def induced_coefficients(self):
        """(p, q, r) of the monic cubic this parameter pair defines."""
        h, s = self.h, self.s
        return (h * s, -(h + 3) * s**2, s**3)


@dataclass(frozen=True)
class IntegerMatrix3:
    """3x3 matrix of arbitrary-size integers with exact arithmetic."""

    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.entries)
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise ValueError("entries must be 3x3")
        if not all(isinstance(v, int) for r in rows for v in r):
            raise TypeError("entries must be integers")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def identity(cls) -> "IntegerMatrix3":
        return cls(((1, 0, 0), (0, 1, 0), (0, 0, 1)))

    def __mul__(self, other: "IntegerMatrix3") -> "IntegerMatrix3":
        a, b = self.entries, other.entries
        return IntegerMatrix3(
            tuple(
                tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3))
                for i in range(3)
            )
        )

    def pow(self, n: int) -> "IntegerMatrix3":
        """Binary exponentiation; n >= 0."""
        if n < 0:
            raise ValueError("exponent must be nonnegative")
        result = IntegerMatrix3.identity()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def trace(self) -> int:
        e = self.entries
        return e[0][0] + e[1][1] + e[2][2]

    def det(self) -> int:
        (a, b, c), (d, e, f), (g, h, i) = self.entries
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)

    def adjugate(self) -> "IntegerMatrix3":
        """Transpose of the cofactor matrix; M * adj(M) = det(M) * I."""
        (a, b, c), (d, e, f), (g, h, i) = self.entries
        return IntegerMatrix3(
            (
                (e * i - f * h, c * h - b * i, b * f - c * e),
                (f * g - d * i, a * i - c * g, c * d - a * f),
                (d * h - e * g, b * g - a * h, a * e - b * d),
            )
        )


def build_rcp(params: RcpParams) -> Cubic:
    """Monic cubic x^3 + h*s*x^2 - (h+3)*s^2*x + s^3."""
    p, q, r = params.induced_coefficients()
    return Cubic(1, p, q, r)


def is_rcp(p, q, r, policy: PrecisionPolicy) -> bool:
    """Whether p*r^(1/3) + 3*r^(2/3) + q vanishes at target precision.

    Checks only the coefficient relation; whether all three zeros are real
    is reported separately by the roots module.  r = 0 is never accepted.
    """
    if r == 0:
        return False
    ctx = policy.context()
    s = real_cbrt(r, ctx)
    residual = abs(ctx.convert(p) * s + 3 * s**2 + ctx.convert(q))
    return residual < policy.tolerance(ctx)


def rcp_params_from_coeffs(p, q, r, policy: PrecisionPolicy) -> RcpParams:
    """Recover (h, s) from coefficients: s = r^(1/3), h = p/s.

    Stays exact when p, q, r are rational and r is a perfect rational cube.
    Raises NotAnRcp when r = 0 or q does not match -(h+3)*s^2.
    """
    if r == 0:
        raise NotAnRcp("constant term r must be nonzero")
    if _is_exact(p) and _is_exact(q) and _is_exact(r):
        s = _rational_cbrt(Fraction(r))
        if s is not None:
            h = Fraction(p) / s
            if Fraction(q) != -(h + 3) * s**2:
                raise NotAnRcp("q does not equal -(h+3)*s^2")
            return RcpParams(h, s)
    ctx = policy.context()
    s = real_cbrt(r, ctx)
    h = ctx.convert(p) / s
    if abs(ctx.convert(q) + (h + 3) * s**2) >= policy.tolerance(ctx):
        raise NotAnRcp("q does not equal -(h+3)*s^2 within tolerance")
    return RcpParams(h, s)


def build_scp(h) -> Cubic:
    """The s = -1 member x^3 - h*x^2 - (h+3)*x - 1."""
    return Cubic(1, -h, -(h + 3), -1)


def build_rcp_witula(gamma, r, policy: PrecisionPolicy | None = None) -> Cubic:
    """Monic cubic with zeros r^(1/3)/(2-g), (g-1)*r^(1/3), ((2-g)/(1-g))*r^(1/3).

    Equivalent to build_rcp with h = -P(g-1)/((g-1)(g-2)), s = r^(1/3),
    where P(t) = t^3 - 3t + 1.  A policy is required only when r is not a
    perfect rational cube (s is then irrational).
    """
    if gamma == 1 or gamma == 2:
        raise DegenerateGamma("gamma must avoid 1 and 2")
    if r == 0:
        raise InvalidScale("r must be nonzero")
    g = Fraction(gamma) if _is_exact(gamma) else gamma
    t = g - 1
    h = -(t**3 - 3 * t + 1) / (t * (g - 2))
    s = _rational_cbrt(Fraction(r)) if _is_exact(r) else None
    if s is None:
        if policy is None:
            raise TypeError("r is not a perfect rational cube; pass a policy")
        s = real_cbrt(r, policy.context())
    return build_rcp(RcpParams(h, s))


def tau(h):
    """h^2 + 3h + 9; always >= 27/4, and the prime values (for integer h
    not divisible by 3) are the moduli of the period correspondence."""
    return h * h + 3 * h + 9


def companion_matrix(h: int) -> IntegerMatrix3:
    """Companion matrix of x^3 - h*x^2 - (h+3)*x - 1; trace h, det 1."""
    if not isinstance(h, int):
        raise TypeError("h must be an integer")
    return IntegerMatrix3(((0, 1, 0), (0, 0, 1), (1, 3 + h, h)))
