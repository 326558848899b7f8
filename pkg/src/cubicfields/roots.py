"""Closed-form real zeros of cubics and the order-3 zero-permuting map.

The solver handles the three-distinct-real-roots case only (the case
where real radical formulas fail and trigonometric forms apply): the
depressed cubic's quadratic resolvent has conjugate zeros alpha +/- i*beta,
and the zeros are

    -b/(3a) +/- 2*(alpha^2+beta^2)^(1/6) * cos((arctan(beta/alpha) + k*pi)/3)

for k = 0, 2, 4, with the sign following sign(alpha).  For the s = -1
family this specializes to an explicit formula in h, and every member of
the (h, s) family reduces to it by zeros(h, s) = -s * zeros(h, -1).

oracle_roots is the independent cross-check: sign-change bisection plus a
Newton polish, no trigonometry anywhere on its path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .cubic import Cubic, RcpParams, build_rcp, build_scp, tau, _is_exact
from .errors import (
    AmbiguousMatch,
    InvalidScale,
    NotCubic,
    NotThreeRealRoots,
    PoleOfTransform,
)
from .precision import PrecisionPolicy, branch_arctan


@dataclass(frozen=True)
class ZeroTriple:
    """Three real zeros in descending order.

    orbit_order, when known, is the permutation (i0, i1, i2) such that
    zeros[i1] and zeros[i2] are the first and second images of zeros[i0]
    under the cyclic map z -> s^2/(s-z).
    """

    zeros: tuple
    orbit_order: tuple | None = None

    def __iter__(self):
        return iter(self.zeros)

    def __getitem__(self, index):
        return self.zeros[index]


@dataclass(frozen=True)
class ResolventData:
    """Quadratic-resolvent data of a depressed cubic.

    e and f are the depressed coefficients, alpha + i*beta the resolvent
    zero with beta > 0, rho = sqrt(alpha^2 + beta^2), and theta the
    branch arctangent of beta/alpha.
    """

    e: object
    f: object
    alpha: object
    beta: object
    rho: object
    theta: object


def _sorted_desc(values):
    return tuple(sorted(values, reverse=True))


def eta(s, z):
    """The order-3 map z -> s^2/(s - z); exact on exact inputs."""
    if s == 0:
        raise InvalidScale("s must be nonzero")
    if z == s:
        raise PoleOfTransform("z = s is the pole of the transform")
    if _is_exact(s) and _is_exact(z):
        s = Fraction(s)
        z = Fraction(z)
    return s * s / (s - z)


def _orbit_order(zeros, s, ctx):
    """Permutation placing the cyclic images of zeros[0] within zeros."""
    order = [0]
    current = zeros[0]
    for _ in range(2):
        try:
            image = eta(ctx.convert(s), ctx.convert(current))
        except (InvalidScale, PoleOfTransform):
            return None
        index = min(range(3), key=lambda i: abs(ctx.convert(zeros[i]) - image))
        order.append(index)
        current = zeros[index]
    if sorted(order) != [0, 1, 2]:
        return None
    return tuple(order)


def resolvent_data(c: Cubic, policy: PrecisionPolicy) -> ResolventData:
    """Resolvent of the depressed form; raises unless its zeros are non-real."""
    ctx = policy.context()
    a, b, c1, d = (ctx.convert(v) for v in c.coefficients)
    if a == 0:
        raise NotCubic("leading coefficient is zero")
    e = (c1 - b**2 / (3 * a)) / a
    f = (d + 2 * b**3 / (27 * a**2) - b * c1 / (3 * a)) / a
    disc = f * f + 4 * e**3 / 27
    if disc >= 0:
        raise NotThreeRealRoots("resolvent has real zeros")
    alpha = -f / 2
    beta = ctx.sqrt(-disc) / 2
    rho = ctx.sqrt(alpha**2 + beta**2)
    theta = branch_arctan(beta, alpha, ctx)
    return ResolventData(e, f, alpha, beta, rho, theta)


def solve_cubic_trig(c: Cubic, policy: PrecisionPolicy) -> ZeroTriple:
    """All three real zeros of c via the resolvent cosine formula."""
    ctx = policy.context()
    data = resolvent_data(c, policy)
    a, b = ctx.convert(c.a3), ctx.convert(c.a2)
    pi = +ctx.pi
    shift = -b / (3 * a)
    scale = 2 * ctx.cbrt(data.rho)
    sign = 1 if data.alpha >= 0 else -1
    zeros = [shift + sign * scale * ctx.cos((data.theta + k * pi) / 3) for k in (0, 2, 4)]
    return ZeroTriple(_sorted_desc(zeros))


def scp_zeros(h, policy: PrecisionPolicy) -> ZeroTriple:
    """Zeros of x^3 - h*x^2 - (h+3)*x - 1 in closed trigonometric form.

    (h +/- 2*sqrt(tau(h)) * cos((arctan(3*sqrt(3)/(3+2h)) + k*pi)/3)) / 3
    for k = 0, 2, 4; plus branch for h >= -3/2, minus for h <= -3/2.  At
    h = -3/2 the arctangent limit is pi/2 and both branches give
    {1, -1/2, -2}.
    """
    ctx = policy.context()
    hv = ctx.convert(h)
    pi = +ctx.pi
    root_tau = ctx.sqrt(tau(hv))
    theta = branch_arctan(3 * ctx.sqrt(3), 3 + 2 * hv, ctx)
    sign = 1 if hv >= ctx.mpf("-1.5") else -1
    zeros = [(hv + sign * 2 * root_tau * ctx.cos((theta + k * pi) / 3)) / 3 for k in (0, 2, 4)]
    ordered = _sorted_desc(zeros)
    return ZeroTriple(ordered, _orbit_order(ordered, -1, ctx))


def rcp_zeros(params: RcpParams, policy: PrecisionPolicy) -> ZeroTriple:
    """Zeros of the (h, s) cubic: -s times the zeros of the s = -1 member."""
    ctx = policy.context()
    s = ctx.convert(params.s)
    if s == 0:
        raise InvalidScale("s must be nonzero")
    base = scp_zeros(params.h, policy)
    ordered = _sorted_desc([-s * z for z in base.zeros])
    return ZeroTriple(ordered, _orbit_order(ordered, s, ctx))


def orbit(s, alpha) -> ZeroTriple:
    """{alpha, s^2/(s-alpha), -s(s-alpha)/alpha}: the full zero set of any
    member of the family that has alpha for a zero."""
    if s == 0:
        raise InvalidScale("s must be nonzero")
    if alpha == 0 or alpha == s:
        raise PoleOfTransform("alpha must avoid 0 and s")
    first = eta(s, alpha)
    cycle = (alpha, first, eta(s, first))
    if _is_exact(s) and _is_exact(alpha):
        cycle = tuple(Fraction(v) for v in cycle)
    ordered = _sorted_desc(cycle)
    order = tuple(ordered.index(v) for v in cycle)
    return ZeroTriple(ordered, order)


def rcp_through(alpha, s):
    """Parameter h and the cubic of the family with zero alpha and scale s:
    h = (s^3 - 3*s^2*alpha + alpha^3) / (s*(s-alpha)*alpha)."""
    if s == 0:
        raise InvalidScale("s must be nonzero")
    if alpha == 0 or alpha == s:
        raise PoleOfTransform("alpha must avoid 0 and s")
    if _is_exact(s) and _is_exact(alpha):
        s = Fraction(s)
        alpha = Fraction(alpha)
    h = (s**3 - 3 * s**2 * alpha + alpha**3) / (s * (s - alpha) * alpha)
    return h, build_rcp(RcpParams(h, s))


def match_zero(zt: ZeroTriple, target, policy: PrecisionPolicy) -> int:
    """Index of the zero nearest to target; used to pick the k branch that
    equals a prescribed value."""
    ctx = policy.context()
    t = ctx.convert(target)
    distances = sorted((abs(ctx.convert(z) - t), i) for i, z in enumerate(zt.zeros))
    if len(distances) > 1 and distances[1][0] - distances[0][0] < policy.tolerance(ctx):
        raise AmbiguousMatch("two zeros are equidistant from the target")
    return distances[0][1]


def oracle_roots(c: Cubic, policy: PrecisionPolicy) -> ZeroTriple:
    """Roots by bisection plus Newton polish; no trigonometry involved.

    The three roots are isolated by the critical points of the monic form
    and a Cauchy bound, bisected to ~18 digits, then polished to working
    precision.  Serves as the independent oracle for the closed forms.
    """
    disc = c.discriminant()  # exact when the coefficients are exact
    if disc <= 0:
        raise NotThreeRealRoots("discriminant must be positive")

    ctx = policy.context()
    a = ctx.convert(c.a3)
    b = ctx.convert(c.a2) / a
    c1 = ctx.convert(c.a1) / a
    d = ctx.convert(c.a0) / a

    def f(x):
        return ((x + b) * x + c1) * x + d

    def fprime(x):
        return (3 * x + 2 * b) * x + c1

    sq = ctx.sqrt(b * b - 3 * c1)
    x_lo = (-b - sq) / 3
    x_hi = (-b + sq) / 3
    bound = 1 + max(abs(b), abs(c1), abs(d))
    brackets = ((-bound, x_lo), (x_lo, x_hi), (x_hi, bound))

    newton_steps = max(3, math.ceil(math.log2(policy.working_digits / 12)) + 2)
    roots = []
    for lo, hi in brackets:
        flo = f(lo)
        for _ in range(64):
            mid = (lo + hi) / 2
            fmid = f(mid)
            if fmid == 0:
                lo = hi = mid
                break
            if (flo < 0) != (fmid < 0):
                hi = mid
            else:
                lo, flo = mid, fmid
        x = (lo + hi) / 2
        for _ in range(newton_steps):
            x = x - f(x) / fprime(x)
        roots.append(x)
    return ZeroTriple(_sorted_desc(roots))
