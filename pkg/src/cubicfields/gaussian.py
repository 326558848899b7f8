"""Cubic Gaussian periods, their primes, and the period correspondence.

For a prime p = 1 (mod 3) the nonzero residues split into the cubes C0
and its two cosets C1 = g*C0, C2 = g^2*C0 (g the smallest primitive
root).  Each coset is closed under negation (-1 is always a cube), so the
period sums eta^(k) = sum over C_k of exp(2*pi*i*j/p) are real and are
computed here as paired cosine sums.

When p = h^2 + 3h + 9 for an integer h with 3 not dividing h, the periods
are integer shifts of the zeros of x^3 - h*x^2 - (h+3)*x - 1, and their
cyclic differences are (up to orientation) the roots of x^3 - p*x + p.
Everything in this module is pure computation on immutable values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cubic import Cubic, RcpParams, build_rcp, tau
from .errors import (
    InvalidScale,
    NoCubicCosets,
    NotLehmerCase,
    NotPrime,
    NotShanksPrime,
)
from .precision import PrecisionPolicy
from .roots import ZeroTriple, _orbit_order, _sorted_desc

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; the witness set is exact for n < 3.3e24."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _prime_factors(n: int) -> list[int]:
    factors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            factors.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors.append(n)
    return factors


def smallest_primitive_root(p: int) -> int:
    order_factors = _prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in order_factors):
            return g
    raise NotPrime(f"{p} has no primitive root")


def cubic_cosets(p: int):
    """The partition (C0, C1, C2): cubes, g*cubes, g^2*cubes, each sorted."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p % 3 != 1:
        raise NoCubicCosets(f"{p} is not 1 mod 3")
    g = smallest_primitive_root(p)
    c0 = sorted({pow(x, 3, p) for x in range(1, p)})
    c1 = sorted(g * c % p for c in c0)
    c2 = sorted(g * g * c % p for c in c0)
    return tuple(c0), tuple(c1), tuple(c2)


@dataclass(frozen=True)
class PeriodSet:
    """A prime p = 1 (mod 3), its cosets, and the three period values.

    h and L are set when p = tau(h) for an integer h >= -1 with 3 not
    dividing h; L = -(2h+3) for h = 1 (mod 3) and 2h+3 for h = 2 (mod 3).
    """

    p: int
    g: int
    cosets: tuple
    values: tuple
    h: int | None = None
    L: int | None = None


@dataclass(frozen=True)
class DeltaSet:
    """Cyclic period differences oriented to be roots of x^3 - p*x + p.

    orientation is +1 when the g-labelled differences already are, -1 when
    they had to be negated.  closed_form holds the cosine closed-form
    values, signs resolved by matching, aligned elementwise with deltas.
    """

    deltas: tuple
    orientation: int
    closed_form: tuple


def shanks_h(p: int) -> int | None:
    """The admissible h >= -1 with h^2 + 3h + 9 = p, if one exists."""
    disc = 4 * p - 27
    if disc < 0:
        return None
    r = math.isqrt(disc)
    if r * r != disc or (r - 3) % 2 != 0:
        return None
    h = (r - 3) // 2
    if h % 3 == 0 or tau(h) != p:
        return None
    return h


def shanks_primes(limit: int):
    """All (h, p) with h >= -1, 3 not dividing h, p = tau(h) prime <= limit.

    Ascending in p; each prime appears once (tau(h) = tau(-3-h), so only
    the h >= -1 representative is enumerated).  Deterministic output.
    """
    if limit < 7:
        raise ValueError("limit must be at least 7")
    pairs = []
    h = -1
    while tau(h) <= limit:
        if h % 3 != 0 and is_prime(tau(h)):
            pairs.append((h, tau(h)))
        h += 1
    return pairs


def gaussian_periods(p: int, policy: PrecisionPolicy) -> PeriodSet:
    """Period values eta^(k) = sum over C_k of cos(2*pi*j/p), k = 0, 1, 2.

    Negation-closure pairs j with p - j, so each sum runs over the half
    coset below p/2 and doubles.
    """
    cosets = cubic_cosets(p)
    ctx = policy.context()
    step = 2 * (+ctx.pi) / p
    values = tuple(
        2 * ctx.fsum(ctx.cos(step * j) for j in coset if 2 * j < p) for coset in cosets
    )
    h = shanks_h(p)
    L = None
    if h is not None:
        L = -(2 * h + 3) if h % 3 == 1 else 2 * h + 3
    return PeriodSet(p, smallest_primitive_root(p), cosets, values, h, L)


def _require_lehmer(h) -> int:
    if not isinstance(h, int):
        raise TypeError("h must be an integer")
    if h % 3 == 0:
        raise NotLehmerCase("h must not be divisible by 3")
    p = tau(h)
    if not is_prime(p):
        raise NotShanksPrime(f"tau({h}) = {p} is not prime")
    return p


def period_minimal_poly(h: int) -> Cubic:
    """Integer minimal polynomial of the three periods for p = tau(h):
    x^3 + x^2 - ((p-1)/3)x - ((L+3)p - 1)/27."""
    p = _require_lehmer(h)
    L = -(2 * h + 3) if h % 3 == 1 else 2 * h + 3
    constant_num = (L + 3) * p - 1
    if constant_num % 27 != 0:
        raise NotShanksPrime(f"period polynomial of {p} is not integral")
    return Cubic(1, 1, -(p - 1) // 3, -constant_num // 27)


def scp_zeros_via_periods(h: int, policy: PrecisionPolicy) -> ZeroTriple:
    """Zeros of x^3 - h*x^2 - (h+3)*x - 1 as shifted periods:
    (h-1)/3 - eta^(k) for h = 1 (mod 3), (h+1)/3 + eta^(k) for h = 2."""
    p = _require_lehmer(h)
    periods = gaussian_periods(p, policy)
    if h % 3 == 1:
        zeros = [(h - 1) // 3 - e for e in periods.values]
    else:
        zeros = [(h + 1) // 3 + e for e in periods.values]
    ordered = _sorted_desc(zeros)
    return ZeroTriple(ordered, _orbit_order(ordered, -1, policy.context()))


def lrcp_zeros_via_periods(h: int, s, policy: PrecisionPolicy) -> ZeroTriple:
    """Zeros of the (h, s) cubic as affine images of the periods:
    -(1/3)s(h-1-3*eta) for h = 1 (mod 3), -(1/3)s(h+1+3*eta) for h = 2."""
    if s == 0:
        raise InvalidScale("s must be nonzero")
    p = _require_lehmer(h)
    ctx = policy.context()
    sv = ctx.convert(s)
    periods = gaussian_periods(p, policy)
    if h % 3 == 1:
        zeros = [-sv * (h - 1 - 3 * e) / 3 for e in periods.values]
    else:
        zeros = [-sv * (h + 1 + 3 * e) / 3 for e in periods.values]
    ordered = _sorted_desc(zeros)
    return ZeroTriple(ordered, _orbit_order(ordered, sv, ctx))


def verify_idscrp(h: int, s, x, policy: PrecisionPolicy):
    """Residual of the factorization of the (h, s) cubic through the
    period polynomial G at the matching affine argument:

        rho(h, s, x) =  s^3 * G(x/s + (h-1)/3)    for h = 1 (mod 3)
        rho(h, s, x) = -s^3 * G(-x/s - (h+1)/3)   for h = 2 (mod 3)

    G is always derived from the integral period polynomial.
    """
    if s == 0:
        raise InvalidScale("s must be nonzero")
    _require_lehmer(h)
    g_poly = period_minimal_poly(h)
    ctx = policy.context()
    sv = ctx.convert(s)
    xv = ctx.convert(x)
    rho = build_rcp(RcpParams(h, sv)).evaluate(xv, ctx)
    if h % 3 == 1:
        theta = xv / sv + (h - 1) // 3
        rhs = sv**3 * g_poly.evaluate(theta, ctx)
    else:
        theta = -xv / sv - (h + 1) // 3
        rhs = -(sv**3) * g_poly.evaluate(theta, ctx)
    return abs(rho - rhs)


def period_differences(p: int, policy: PrecisionPolicy) -> DeltaSet:
    """Cyclic differences of the periods, oriented to x^3 - p*x + p, with
    the cosine closed forms matched sign-by-sign against them.

    The closed forms are 2*sqrt(p/3) * cos((arctan(1/theta_h) + k*pi)/3),
    k = 0, 2, 4, where theta_h = 3*sqrt(3)/(3+2h); the coset labelling
    leaves their signs open, so each is resolved numerically.
    """
    h = shanks_h(p)
    if h is None or not is_prime(p):
        raise NotShanksPrime(f"{p} is not of the form h^2 + 3h + 9")
    periods = gaussian_periods(p, policy)
    e0, e1, e2 = periods.values
    deltas = (e0 - e1, e1 - e2, e2 - e0)

    def max_residual(values):
        return max(abs(d**3 - p * d + p) for d in values)

    negated = tuple(-d for d in deltas)
    if max_residual(deltas) <= max_residual(negated):
        oriented, orientation = deltas, 1
    else:
        oriented, orientation = negated, -1

    ctx = policy.context()
    pi = +ctx.pi
    theta_h = 3 * ctx.sqrt(3) / (3 + 2 * h)
    angle = ctx.atan(1 / theta_h)
    magnitudes = [2 * ctx.sqrt(ctx.mpf(p) / 3) * ctx.cos((angle + k * pi) / 3) for k in (0, 2, 4)]

    candidates = sorted(
        (abs(sign * m - oriented[i]), k, i, sign)
        for k, m in enumerate(magnitudes)
        for i in range(3)
        for sign in (1, -1)
    )
    matched = [None, None, None]
    used_k = set()
    for _, k, i, sign in candidates:
        if k in used_k or matched[i] is not None:
            continue
        matched[i] = sign * magnitudes[k]
        used_k.add(k)
    return DeltaSet(oriented, orientation, tuple(matched))
