"""Residual verification of the integral and hypergeometric identities.

Each ``verify_*`` operation evaluates both sides of one identity instance by
independent routes (quadrature vs. quadrature with a different integrand, or
series vs. series) and returns an IdentityReport carrying the residual and a
pass flag.  Nothing here is symbolic; the exact counterparts live in
``proofcert`` and ``legendre``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .quadrature import DEFAULT_REL_TOL, WeightedIntegrand, tanh_sinh_integrate
from .special import (
    AppellParams,
    Hyp2F1Params,
    SeriesDiverges,
    appell_f1,
    gauss_2f1,
    log_beta,
    log_gamma,
)

#: Default acceptance tolerance for identity residuals; the quadrature target
#: sits two decades lower so discretization error never dominates.
DEFAULT_TOL = 1e-10

_TINY = 1e-300


@dataclass(frozen=True, eq=False)
class IdentityReport:
    """One verified identity instance: both sides, residuals, pass flag."""

    identity: str
    params: dict
    lhs: float
    rhs: float
    abs_err: float
    rel_err: float
    tol: float
    passed: bool

    @staticmethod
    def build(identity: str, params: dict, lhs: float, rhs: float, tol: float) -> "IdentityReport":
        abs_err = abs(lhs - rhs)
        rel_err = abs_err / max(abs(lhs), abs(rhs), _TINY)
        return IdentityReport(identity, dict(params), lhs, rhs, abs_err, rel_err, tol, rel_err <= tol)

    @staticmethod
    def from_bool(identity: str, params: dict, ok: bool) -> "IdentityReport":
        """Wrap an exact (symbolic) yes/no check in the numeric report shape."""
        rhs = 1.0 if ok else 0.0
        return IdentityReport(identity, dict(params), 1.0, rhs, 1.0 - rhs, 1.0 - rhs, 0.0, ok)

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "params": dict(sorted(self.params.items())),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "abs_err": self.abs_err,
            "rel_err": self.rel_err,
            "tol": self.tol,
            "pass": self.passed,
        }


@dataclass(frozen=True)
class EzzParams:
    """Parameters (a, b, n) of the two-sided weighted integral identity."""

    a: float
    b: float
    n: float

    def __post_init__(self):
        if not (self.a > 0.0 and self.b > 0.0):
            raise ValueError(f"requires a, b > 0, got a={self.a}, b={self.b}")
        if not self.n > -1.0:
            raise ValueError(f"requires n > -1, got n={self.n}")


@dataclass(frozen=True)
class TheoremParams:
    """Parameters (a, b, k, n, s, l) of the generalized identity."""

    a: float
    b: float
    k: float
    n: float
    s: float
    l: float

    def __post_init__(self):
        if not (self.a > 0.0 and self.b > 0.0):
            raise ValueError(f"requires a, b > 0, got a={self.a}, b={self.b}")
        if not (self.s > -1.0 and self.l > -1.0):
            raise ValueError(f"requires s, l > -1, got s={self.s}, l={self.l}")


def make_integrand(l_exp: float, s_exp: float, smooth) -> WeightedIntegrand:
    """Weighted integrand; integer exponents >= 0 are folded into the smooth
    factor so polynomial weights take the plain evaluation path."""
    li, si = float(l_exp), float(s_exp)
    if li.is_integer() and li >= 0 and si.is_integer() and si >= 0:
        il, sl = int(li), int(si)

        def folded(x, _f=smooth):
            return x**il * (1.0 - x) ** sl * _f(x)

        return WeightedIntegrand(0.0, 0.0, folded)
    return WeightedIntegrand(li, si, smooth)


def _quad(l_exp, s_exp, smooth, rel_tol) -> float:
    return tanh_sinh_integrate(make_integrand(l_exp, s_exp, smooth), rel_tol).value


def verify_ezz(
    p: EzzParams, tol: float = DEFAULT_TOL, quad_rel_tol: float = DEFAULT_REL_TOL
) -> IdentityReport:
    """Check  int x^n (1-x)^n / ((x+a)(x+b))^(n+1)
           == int x^n (1-x)^n / ((a-b) x + (a+1) b)^(n+1)  on [0, 1]."""
    a, b, n = p.a, p.b, p.n
    lhs = _quad(n, n, lambda x: ((x + a) * (x + b)) ** -(n + 1.0), quad_rel_tol)
    rhs = _quad(n, n, lambda x: ((a - b) * x + (a + 1.0) * b) ** -(n + 1.0), quad_rel_tol)
    return IdentityReport.build("ezz", {"a": a, "b": b, "n": n}, lhs, rhs, tol)


def verify_theorem_main(
    p: TheoremParams, tol: float = DEFAULT_TOL, quad_rel_tol: float = DEFAULT_REL_TOL
) -> IdentityReport:
    """Check the generalized identity

       int x^l (1-x)^s / ((x+a)^(k+1) (x+b)^(n+1))
    == (b+1)^(s-n) / b^(n-l)
       * int x^s (1-x)^l (x+b)^(n+k-l-s) / ((a-b) x + (a+1) b)^(k+1)."""
    a, b, k, n, s, l = p.a, p.b, p.k, p.n, p.s, p.l
    lhs = _quad(l, s, lambda x: (x + a) ** -(k + 1.0) * (x + b) ** -(n + 1.0), quad_rel_tol)
    rhs_integral = _quad(
        s,
        l,
        lambda x: (x + b) ** (n + k - l - s) * ((a - b) * x + (a + 1.0) * b) ** -(k + 1.0),
        quad_rel_tol,
    )
    prefactor = (b + 1.0) ** (s - n) / b ** (n - l)
    params = {"a": a, "b": b, "k": k, "n": n, "s": s, "l": l}
    return IdentityReport.build("theorem", params, lhs, prefactor * rhs_integral, tol)


def verify_appell_identity(
    alpha: float,
    beta: float,
    beta_prime: float,
    x: float,
    y: float,
    tol: float = DEFAULT_TOL,
) -> IdentityReport:
    """Check  2F1(alpha, beta; beta+beta'; (y-x)/(y-1))
           == (1-y)^alpha * F1(alpha; beta, beta'; beta+beta'; x, y)."""
    _require_corollary_range(alpha, beta, beta_prime, x, y)
    z = (y - x) / (y - 1.0)
    if abs(z) > 0.95:
        raise SeriesDiverges(f"transformed argument (y-x)/(y-1) = {z} outside series clamp")
    lhs = gauss_2f1(Hyp2F1Params(alpha, beta, beta + beta_prime, z))
    rhs = (1.0 - y) ** alpha * appell_f1(
        AppellParams(alpha, beta, beta_prime, beta + beta_prime, x, y)
    )
    params = {"alpha": alpha, "beta": beta, "beta_prime": beta_prime, "x": x, "y": y}
    return IdentityReport.build("appell", params, lhs, rhs, tol)


def verify_gen_integral(
    alpha: float,
    beta: float,
    beta_prime: float,
    x: float,
    y: float,
    tol: float = DEFAULT_TOL,
    quad_rel_tol: float = DEFAULT_REL_TOL,
) -> IdentityReport:
    """Check the integral form of the Appell identity:

       int t^(b-1) (1-t)^(b'-1) / ((y-x) t + 1-y)^alpha
    == G(b) G(b') / (G(alpha) G(b+b'-alpha))
       * int t^(alpha-1) (1-t)^(b+b'-alpha-1) / ((1-tx)^b (1-ty)^b')."""
    _require_corollary_range(alpha, beta, beta_prime, x, y)
    lhs = _quad(
        beta - 1.0,
        beta_prime - 1.0,
        lambda t: ((y - x) * t + 1.0 - y) ** -alpha,
        quad_rel_tol,
    )
    rhs_integral = _quad(
        alpha - 1.0,
        beta + beta_prime - alpha - 1.0,
        lambda t: (1.0 - t * x) ** -beta * (1.0 - t * y) ** -beta_prime,
        quad_rel_tol,
    )
    prefactor = math.exp(
        log_gamma(beta)
        + log_gamma(beta_prime)
        - log_gamma(alpha)
        - log_gamma(beta + beta_prime - alpha)
    )
    params = {"alpha": alpha, "beta": beta, "beta_prime": beta_prime, "x": x, "y": y}
    return IdentityReport.build("gen", params, lhs, prefactor * rhs_integral, tol)


def _require_corollary_range(alpha, beta, beta_prime, x, y):
    if not (alpha > 0.0 and beta > 0.0 and beta_prime > 0.0):
        raise ValueError("requires alpha, beta, beta' > 0")
    if not beta + beta_prime > alpha:
        raise ValueError(f"requires beta + beta' > alpha, got {beta + beta_prime} <= {alpha}")
    if not (x < 1.0 and y < 1.0):
        raise ValueError(f"requires x, y < 1, got x={x}, y={y}")


def verify_5ezz(
    a: float,
    b: float,
    k: float,
    l: float,
    s: float,
    tol: float = DEFAULT_TOL,
    quad_rel_tol: float = DEFAULT_REL_TOL,
) -> IdentityReport:
    """Check the n = l+s-k specialization

       int x^l (1-x)^s / ((x+a)^(k+1) (x+b)^(l+s-k+1))
    == (b+1)^(k-l) / b^(s-k) * int x^s (1-x)^l / ((a-b) x + (a+1) b)^(k+1),

    and cross-check against the general identity at n = l+s-k (the two use
    the same integrals, so they must agree to ~1e-12)."""
    if not (a > 0.0 and b > 0.0):
        raise ValueError(f"requires a, b > 0, got a={a}, b={b}")
    if not (l > -1.0 and s > -1.0):
        raise ValueError(f"requires l, s > -1, got l={l}, s={s}")
    n = l + s - k
    lhs = _quad(l, s, lambda x: (x + a) ** -(k + 1.0) * (x + b) ** -(n + 1.0), quad_rel_tol)
    rhs_integral = _quad(
        s, l, lambda x: ((a - b) * x + (a + 1.0) * b) ** -(k + 1.0), quad_rel_tol
    )
    rhs = (b + 1.0) ** (k - l) / b ** (s - k) * rhs_integral

    general = verify_theorem_main(TheoremParams(a, b, k, n, s, l), tol, quad_rel_tol)
    for ours, theirs, side in ((lhs, general.lhs, "lhs"), (rhs, general.rhs, "rhs")):
        if abs(ours - theirs) > 1e-12 * max(abs(ours), abs(theirs), _TINY):
            raise RuntimeError(
                f"specialized and general {side} disagree: {ours!r} vs {theirs!r}"
            )
    params = {"a": a, "b": b, "k": k, "l": l, "s": s}
    return IdentityReport.build("5ezz", params, lhs, rhs, tol)


def verify_chv(
    b: float,
    n: int,
    k: int,
    tol: float = DEFAULT_TOL,
    quad_rel_tol: float = DEFAULT_REL_TOL,
) -> IdentityReport:
    """Check  int x^n (1-x)^n / (x+b)^(n+k+1)
           == (b (b+1))^(-k) * int x^n (1-x)^n / (x+b)^(n-k+1)."""
    if b <= 0.0:
        raise ValueError(f"requires b > 0, got {b}")
    if not 0 <= k <= n:
        raise ValueError(f"requires 0 <= k <= n, got k={k}, n={n}")
    lhs = _quad(n, n, lambda x: (x + b) ** -(n + k + 1.0), quad_rel_tol)
    rhs = (b * (b + 1.0)) ** -k * _quad(
        n, n, lambda x: (x + b) ** -(n - k + 1.0), quad_rel_tol
    )
    return IdentityReport.build("chv", {"b": b, "n": n, "k": k}, lhs, rhs, tol)


def verify_gamma_mixed_partial(
    alpha: float, beta: float, gamma: float, m: int, n: int, tol: float = 1e-12
) -> IdentityReport:
    """Check  G(gamma-alpha) G(alpha+m+n) B(gamma+m-beta, beta+n)
           == G(beta+n) G(gamma+m-beta) B(alpha+m+n, gamma-alpha).

    Integer (alpha, beta, gamma) take an exact big-rational factorial path;
    real parameters are compared in log-space."""
    if m < 0 or n < 0:
        raise ValueError(f"requires m, n >= 0, got m={m}, n={n}")
    args = {
        "gamma-alpha": gamma - alpha,
        "alpha+m+n": alpha + m + n,
        "gamma+m-beta": gamma + m - beta,
        "beta+n": beta + n,
    }
    for name, v in args.items():
        if v <= 0.0:
            raise ValueError(f"requires {name} > 0, got {v}")
    params = {"alpha": alpha, "beta": beta, "gamma": gamma, "m": m, "n": n}

    def all_ints(*vals):
        return all(float(v).is_integer() for v in vals)

    if all_ints(alpha, beta, gamma):
        lhs_x = _exact_gamma(gamma - alpha) * _exact_gamma(alpha + m + n) * _exact_beta(
            gamma + m - beta, beta + n
        )
        rhs_x = _exact_gamma(beta + n) * _exact_gamma(gamma + m - beta) * _exact_beta(
            alpha + m + n, gamma - alpha
        )
        abs_err = float(abs(lhs_x - rhs_x))
        rel_err = abs_err / max(abs(float(lhs_x)), abs(float(rhs_x)), _TINY)
        return IdentityReport(
            "gamma_mixed", params, float(lhs_x), float(rhs_x), abs_err, rel_err, tol, rel_err <= tol
        )

    lhs = math.exp(
        log_gamma(gamma - alpha) + log_gamma(alpha + m + n) + log_beta(gamma + m - beta, beta + n)
    )
    rhs = math.exp(
        log_gamma(beta + n) + log_gamma(gamma + m - beta) + log_beta(alpha + m + n, gamma - alpha)
    )
    return IdentityReport.build("gamma_mixed", params, lhs, rhs, tol)


def _exact_gamma(j: float) -> Fraction:
    return Fraction(math.factorial(int(j) - 1))


def _exact_beta(p: float, q: float) -> Fraction:
    return _exact_gamma(p) * _exact_gamma(q) / _exact_gamma(p + q)
