"""Exact verification of the proof machinery behind the integral identity.

Four pieces, all over the exact algebra kernel:

* the Moebius substitution x = b(1-u)/(b+u) and its action on the four
  singular points of the integrands;
* the two generating quadratics P1 = (x+a)(x+b) - t x (1-x) and
  P2 = (a-b) x + (a+1) b - t x (1-x), which share discriminant and B + 2C,
  plus the closed form for int_0^1 dx / (quadratic);
* the creative-telescoping certificates R1, R2: each F_j = 1/P_j satisfies
  (t - S) F_j + (t^2 - 2 t S + D) dF_j/dt + d/dx(F_j R_j) = 0 with
  S = 2ab + a + b and D = (a-b)^2, and the x = 0..1 boundary term of
  F_j R_j is the constant 2;
* the first-order ODE those facts imply for the generating function I(t),
  driven as an exact Taylor recurrence whose coefficients live in
  Q + Q * log(a(b+1) / ((a+1)b)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import A, B, ONE, T, X, MultiPoly, RatFunc, Scalar
from .quadrature import DEFAULT_REL_TOL, integrate_01

#: Point at infinity for the Moebius map (plain float inf).
INFINITY = math.inf


def moebius_map(u, a: Scalar, b: Scalar):
    """Exact image of u under x = b(1-u)/(b+u).

    Accepts a Fraction (or int) or INFINITY; returns a Fraction, or INFINITY
    for the pole at u = -b.  The map sends 0 -> 1, 1 -> 0, the point
    b(a+1)/(b-a) -> -a (for a != b), and infinity -> -b.
    """
    a, b = Fraction(a), Fraction(b)
    if isinstance(u, float) and math.isinf(u):
        return -b
    u = Fraction(u)
    if u == -b:
        return INFINITY
    return b * (1 - u) / (b + u)


@dataclass(frozen=True)
class QuadraticInX:
    """A x^2 + B x + C with coefficients polynomial in (a, b, t)."""

    A: MultiPoly
    B: MultiPoly
    C: MultiPoly

    def discriminant(self) -> MultiPoly:
        return self.B * self.B - 4 * self.A * self.C

    def b_plus_2c(self) -> MultiPoly:
        return self.B + 2 * self.C

    def as_poly(self) -> MultiPoly:
        return self.A * X * X + self.B * X + self.C

    def coefficients_at(self, a: float, b: float, t: float) -> tuple[float, float, float]:
        point = {"a": Fraction(a), "b": Fraction(b), "t": Fraction(t), "x": 0}
        return tuple(float(c.evaluate(point)) for c in (self.A, self.B, self.C))


def _split_quadratic(p: MultiPoly) -> QuadraticInX:
    parts = {0: MultiPoly(), 1: MultiPoly(), 2: MultiPoly()}
    for exps, coeff in p.terms():
        xa, xb, xt, xx = exps
        if xx > 2:
            raise ValueError(f"degree in x exceeds 2: {p}")
        parts[xx] = parts[xx] + MultiPoly({(xa, xb, xt, 0): coeff})
    return QuadraticInX(parts[2], parts[1], parts[0])


def build_p1_p2() -> tuple[QuadraticInX, QuadraticInX]:
    """The two generating quadratics, built from their defining products and
    split into x-coefficients."""
    p1 = (X + A) * (X + B) - T * X * (ONE - X)
    p2 = (A - B) * X + (A + 1) * B - T * X * (ONE - X)
    return _split_quadratic(p1), _split_quadratic(p2)


def check_invariants_match() -> bool:
    """True iff P1 and P2 share both the discriminant and B + 2C, exactly."""
    p1, p2 = build_p1_p2()
    return (p1.discriminant() - p2.discriminant()).is_zero and (
        p1.b_plus_2c() - p2.b_plus_2c()
    ).is_zero


def quadratic_log_integral(A_: float, B_: float, C_: float) -> float:
    """Closed form of int_0^1 dx / (A x^2 + B x + C).

    For A != 0 requires discriminant B^2 - 4AC > 0 and no root in [0, 1]
    (guarded by sign checks at 0, 1 and the vertex); then the value is
    (1/r) log((B + 2C + r) / (B + 2C - r)) with r = sqrt(disc).  A = 0
    falls back to the linear integral (1/B) log((B+C)/C), and A = B = 0 to
    the constant 1/C.
    """

    def p(x):
        return (A_ * x + B_) * x + C_

    if p(0.0) == 0.0 or p(1.0) == 0.0:
        raise ValueError("integrand pole at an endpoint")
    if A_ == 0.0:
        if B_ == 0.0:
            return 1.0 / C_
        if p(0.0) * p(1.0) < 0.0:
            raise ValueError("linear denominator changes sign on [0, 1]")
        return math.log((B_ + C_) / C_) / B_
    disc = B_ * B_ - 4.0 * A_ * C_
    if disc <= 0.0:
        raise ValueError(f"requires positive discriminant, got {disc}")
    vertex = -B_ / (2.0 * A_)
    if p(0.0) * p(1.0) < 0.0 or (0.0 < vertex < 1.0 and p(vertex) * p(0.0) <= 0.0):
        raise ValueError("denominator has a zero in [0, 1]")
    r = math.sqrt(disc)
    s = B_ + 2.0 * C_
    return math.log((s + r) / (s - r)) / r


def reciprocal_quadratic_integral(
    A_: float, B_: float, C_: float, rel_tol: float = DEFAULT_REL_TOL
) -> float:
    """int_0^1 dx / (A x^2 + B x + C) for a denominator without zeros in
    [0, 1]: the log closed form where its discriminant condition holds,
    tanh-sinh quadrature otherwise (complex roots leave the integrand
    one-signed, but outside the closed form's range)."""
    if A_ != 0.0 and B_ * B_ - 4.0 * A_ * C_ <= 0.0:
        return integrate_01(lambda x: 1.0 / ((A_ * x + B_) * x + C_), rel_tol).value
    return quadratic_log_integral(A_, B_, C_)


# ---------------------------------------------------------------------------
# telescoping certificates
# ---------------------------------------------------------------------------

_S_POLY = 2 * A * B + A + B           # S = 2ab + a + b
_D_POLY = (A - B) * (A - B)           # D = (a-b)^2


@dataclass(frozen=True)
class Certificate:
    which: str
    value: RatFunc


def certificate(which: str) -> Certificate:
    """The built-in certificate R1 or R2 as an exact rational function."""
    if which == "R1":
        num = ((A + B + T + 2) * X + 2 * A * B + A + B - T) * X
        return Certificate("R1", RatFunc(num))
    if which == "R2":
        num = ((2 * A * B + A + B) * T - _D_POLY) * X * X + B * (A + 1) * (
            2 * A * B + A + B - T
        )
        return Certificate("R2", RatFunc(num, T + B - A))
    raise ValueError(f"unknown certificate {which!r}; expected 'R1' or 'R2'")


def _integrand_poly(which: str) -> MultiPoly:
    p1, p2 = build_p1_p2()
    if which == "R1":
        return p1.as_poly()
    if which == "R2":
        return p2.as_poly()
    raise ValueError(f"unknown certificate {which!r}; expected 'R1' or 'R2'")


def telescoping_residual(which: str, certificate_value: RatFunc | None = None) -> RatFunc:
    """(t - S) F + (t^2 - 2tS + D) dF/dt + d/dx(F R), with F = 1/P."""
    f = RatFunc(ONE, _integrand_poly(which))
    r = certificate_value if certificate_value is not None else certificate(which).value
    ode_c0 = RatFunc(T - _S_POLY)
    ode_c1 = RatFunc(T * T - 2 * T * _S_POLY + _D_POLY)
    return ode_c0 * f + ode_c1 * f.diff("t") + (f * r).diff("x")


def verify_telescoping_certificate(
    which: str, certificate_value: RatFunc | None = None
) -> bool:
    """True iff the telescoping combination is identically zero.

    ``certificate_value`` overrides the built-in certificate; mutation tests
    use it to confirm the zero test rejects perturbed certificates.
    """
    return telescoping_residual(which, certificate_value).is_zero


#: Monomials (exponents over a, b, t, x) perturbed by mutation soundness
#: checks; adding 1 to any single numerator coefficient must break the
#: telescoping identity.
MUTATION_MONOMIALS = (
    (0, 0, 0, 0),
    (0, 0, 0, 1),
    (0, 0, 0, 2),
    (1, 0, 0, 0),
    (0, 1, 0, 0),
    (0, 0, 1, 0),
    (1, 0, 0, 1),
    (0, 1, 0, 2),
    (0, 0, 1, 2),
    (1, 1, 0, 1),
)


def mutated_certificate(which: str, index: int) -> RatFunc:
    """Certificate with +1 added to one numerator monomial coefficient."""
    base = certificate(which).value
    mono = MUTATION_MONOMIALS[index % len(MUTATION_MONOMIALS)]
    return RatFunc(base.num + MultiPoly({mono: 1}), base.den)


def boundary_term(which: str, certificate_value: RatFunc | None = None) -> RatFunc:
    """[F R] at x = 1 minus [F R] at x = 0, as a rational function of
    (a, b, t); equals the constant 2 for both built-in certificates."""
    f = RatFunc(ONE, _integrand_poly(which))
    r = certificate_value if certificate_value is not None else certificate(which).value
    fr = f * r
    return fr.subs("x", 1) - fr.subs("x", 0)


# ---------------------------------------------------------------------------
# ODE-driven Taylor recurrence
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LogLinearCoeff:
    """Exact value p + q * L, where L = log(a(b+1) / ((a+1)b)) is fixed by
    the parameter pair (a, b)."""

    p: Fraction
    q: Fraction

    def value(self, log_lambda: float) -> float:
        """float(p) + float(q) * log_lambda.

        Fine while p, q are moderate; deep recurrence coefficients carry
        huge cancelling p, q, so use ``taylor_coeff_floats`` for those.
        """
        return float(self.p) + float(self.q) * log_lambda


def log_lambda(a: Scalar, b: Scalar) -> float:
    """log(a(b+1) / ((a+1)b)) as a float."""
    a, b = Fraction(a), Fraction(b)
    return math.log(a * (b + 1) / ((a + 1) * b))


def log_as_fraction(r: Fraction, digits: int = 50) -> Fraction:
    """log(r) as an exact rational with absolute error below 10**-digits.

    Uses log(r) = 2 atanh(u) with u = (r-1)/(r+1); the series tail is
    geometric in u**2, giving a rigorous stopping bound.
    """
    r = Fraction(r)
    if r <= 0:
        raise ValueError(f"log_as_fraction requires r > 0, got {r}")
    bound = Fraction(1, 10**digits)
    u = (r - 1) / (r + 1)
    u2 = u * u
    term = u  # u**(2k+1)
    total = term
    k = 1
    while abs(term) * u2 / ((2 * k + 1) * (1 - u2)) >= bound:
        term *= u2
        total += term / (2 * k + 1)
        k += 1
    return 2 * total


def ode_taylor_coeffs(a: Scalar, b: Scalar, count: int) -> list[LogLinearCoeff]:
    """First ``count`` Taylor coefficients of the generating function I(t).

    I satisfies (t - S) I + (t^2 - 2tS + D) I' + 2 = 0 with S = 2ab + a + b,
    D = (a-b)^2 and I(0) = L / (a-b).  Matching powers of t gives

        c_{m+1} = (S (2m+1) c_m - m c_{m-1} - 2*[m=0]) / (D (m+1)),

    which stays inside Q + Q*L, so the coefficients are exact pairs.
    """
    a, b = Fraction(a), Fraction(b)
    if a <= 0 or b <= 0:
        raise ValueError(f"requires a, b > 0, got a={a}, b={b}")
    if a == b:
        raise ValueError("requires a != b (the recurrence divides by (a-b)^2)")
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    s = 2 * a * b + a + b
    d = (a - b) ** 2
    coeffs = [LogLinearCoeff(Fraction(0), 1 / (a - b))]
    for m in range(count - 1):
        cm = coeffs[m]
        cm1 = coeffs[m - 1] if m >= 1 else LogLinearCoeff(Fraction(0), Fraction(0))
        drive = Fraction(2) if m == 0 else Fraction(0)
        denom = d * (m + 1)
        coeffs.append(
            LogLinearCoeff(
                (s * (2 * m + 1) * cm.p - m * cm1.p - drive) / denom,
                (s * (2 * m + 1) * cm.q - m * cm1.q) / denom,
            )
        )
    return coeffs


def _decimal_magnitude(f: Fraction) -> int:
    """Upper bound on log10 |f| (0 for f = 0)."""
    if not f:
        return 0
    return int(0.30103 * (abs(f.numerator).bit_length() - f.denominator.bit_length())) + 1


def taylor_coeff_floats(a: Scalar, b: Scalar, count: int) -> list[float]:
    """The first ``count`` Taylor coefficients of I(t), as accurate floats.

    The exact pairs (p, q) grow geometrically with nearly cancelling
    contributions p and q*L while the coefficients themselves shrink, so L
    is expanded as an exact rational and the combination is formed exactly
    before rounding once.  The expansion precision doubles until the error
    bound |q| * 10**-digits sits well below the smallest coefficient.
    """
    a, b = Fraction(a), Fraction(b)
    coeffs = ode_taylor_coeffs(a, b, count)
    ratio = a * (b + 1) / ((a + 1) * b)
    q_max = max(abs(c.q) for c in coeffs)
    digits = 40 + max(0, _decimal_magnitude(q_max))
    while True:
        lam = log_as_fraction(ratio, digits)
        exact = [c.p + c.q * lam for c in coeffs]
        err_bound = q_max * Fraction(1, 10**digits)
        smallest = min((abs(v) for v in exact if v), default=Fraction(1))
        if err_bound * 10**13 <= smallest or digits > 4000:
            return [float(v) for v in exact]
        digits *= 2


def i_at_zero(a: Scalar, b: Scalar) -> float:
    """I(0) = log(a(b+1) / ((a+1)b)) / (a - b), numerically."""
    a, b = Fraction(a), Fraction(b)
    if a <= 0 or b <= 0:
        raise ValueError(f"requires a, b > 0, got a={a}, b={b}")
    if a == b:
        # limit value 1/(a(a+1)): the log and the 1/(a-b) pole cancel
        return float(1 / (a * (a + 1)))
    return log_lambda(a, b) / float(a - b)
