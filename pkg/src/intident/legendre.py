"""Exact univariate polynomial engine for the derivative-symmetry and
eigenoperator corollaries.

Everything is dense over Fraction: powers of (x^2 - 1), the functions
x^n (1+x)^n, Legendre polynomials via the Rodrigues construction, the
k-fold derivative symmetry, the triple-binomial identity with its
terminating 3F2 form, and the operator D^k (x^2-1)^k D^k whose
eigenfunctions the Legendre polynomials are.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

from .algebra import binomial

Scalar = Union[int, Fraction]


class DegenerateParameters(ValueError):
    """A lower Pochhammer vanished at a live series index, or the reference
    binomial ratio is undefined."""


class ExactPoly:
    """Dense univariate polynomial over Q; coeffs[i] is the x^i coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def constant(cls, c: Scalar) -> "ExactPoly":
        return cls((c,))

    @classmethod
    def x(cls) -> "ExactPoly":
        return cls((0, 1))

    @staticmethod
    def coerce(value: "ExactPoly | Scalar") -> "ExactPoly":
        if isinstance(value, ExactPoly):
            return value
        return ExactPoly((value,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other):
        other = ExactPoly.coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return ExactPoly(
            (self.coeffs[i] if i < len(self.coeffs) else 0)
            + (other.coeffs[i] if i < len(other.coeffs) else 0)
            for i in range(n)
        )

    __radd__ = __add__

    def __neg__(self):
        return ExactPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-ExactPoly.coerce(other))

    def __rsub__(self, other):
        return ExactPoly.coerce(other) - self

    def __mul__(self, other):
        other = ExactPoly.coerce(other)
        if self.is_zero or other.is_zero:
            return ExactPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            if not ci:
                continue
            for j, cj in enumerate(other.coeffs):
                out[i + j] += ci * cj
        return ExactPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"power must be a nonnegative integer, got {n}")
        result = ExactPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def derivative(self, k: int = 1) -> "ExactPoly":
        """Exact k-fold derivative; zero once k exceeds the degree."""
        if k < 0:
            raise ValueError(f"derivative order must be >= 0, got {k}")
        cs = self.coeffs
        for _ in range(k):
            if len(cs) <= 1:
                return ExactPoly()
            cs = tuple(cs[i] * i for i in range(1, len(cs)))
        return ExactPoly(cs)

    def compose_affine(self, alpha: Scalar, beta: Scalar) -> "ExactPoly":
        """p(alpha * x + beta), by Horner over the affine argument."""
        arg = ExactPoly((beta, alpha))
        out = ExactPoly()
        for c in reversed(self.coeffs):
            out = out * arg + ExactPoly.constant(c)
        return out

    def __call__(self, v: Scalar) -> Fraction:
        v = Fraction(v)
        out = Fraction(0)
        for c in reversed(self.coeffs):
            out = out * v + c
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ExactPoly.coerce(other)
        if not isinstance(other, ExactPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                mono = "x" if i == 1 else f"x^{i}"
                if c == 1:
                    parts.append(mono)
                elif c == -1:
                    parts.append(f"-{mono}")
                else:
                    parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"ExactPoly({self})"


def poly_derivative(p: ExactPoly, k: int) -> ExactPoly:
    """k-fold formal derivative."""
    return p.derivative(k)


def _x2m1_power(n: int) -> ExactPoly:
    return ExactPoly((-1, 0, 1)) ** n


def legendre_poly(n: int) -> ExactPoly:
    """n-th Legendre polynomial by the Rodrigues construction:
    (1 / (2^n n!)) * D^n (x^2 - 1)^n; normalized so P_n(1) = 1."""
    if n < 0:
        raise ValueError(f"requires n >= 0, got {n}")
    d = _x2m1_power(n).derivative(n)
    return Fraction(1, 2**n * math.factorial(n)) * d


def verify_di_symmetry(n: int, k: int) -> bool:
    """Exact check of
    (n-k)! (x^2-1)^k D^(n+k) (x^2-1)^n == (n+k)! D^(n-k) (x^2-1)^n."""
    _check_nk(n, k)
    base = _x2m1_power(n)
    lhs = math.factorial(n - k) * _x2m1_power(k) * base.derivative(n + k)
    rhs = math.factorial(n + k) * base.derivative(n - k)
    return lhs == rhs


def verify_corollary2(n: int, k: int) -> bool:
    """Exact check that f_n = x^n (1+x)^n satisfies
    f_k * f_n^(n+k) == ((n+k)! / (n-k)!) * f_n^(n-k)."""
    _check_nk(n, k)

    def f(m: int) -> ExactPoly:
        return (ExactPoly.x() * ExactPoly((1, 1))) ** m

    fn = f(n)
    lhs = f(k) * fn.derivative(n + k)
    scale = math.factorial(n + k) // math.factorial(n - k)
    return lhs == scale * fn.derivative(n - k)


def verify_corollary3(n: int, k: int, l: int) -> bool:
    """Exact big-integer check of the triple-binomial identity
    sum_m C(k,m) C(n,m+l) C(2m+2l, k+n) == C(n,l) C(2l, n-k)."""
    if not (0 <= k <= n and 0 <= l <= n):
        raise ValueError(f"requires 0 <= k, l <= n, got n={n}, k={k}, l={l}")
    lhs = sum(
        binomial(k, m) * binomial(n, m + l) * binomial(2 * m + 2 * l, k + n)
        for m in range(k + 1)
    )
    return lhs == binomial(n, l) * binomial(2 * l, n - k)


def terminating_3f2(n: int, k: int, l: int) -> Fraction:
    """Exact value of the terminating series
    3F2(-k, l-n, l+1/2; l-(k+n)/2+1, (1-n-k)/2+l; 1).

    When defined it equals C(2l, n-k) / C(2l, n+k).  Raises
    DegenerateParameters when C(2l, n+k) = 0 or when a lower Pochhammer
    vanishes at an index the numerator has not already killed.
    """
    if not (0 <= k <= n and 0 <= l <= n):
        raise ValueError(f"requires 0 <= k, l <= n, got n={n}, k={k}, l={l}")
    if binomial(2 * l, n + k) == 0:
        raise DegenerateParameters(f"reference ratio undefined: C({2*l}, {n+k}) = 0")
    uppers = (Fraction(-k), Fraction(l - n), Fraction(2 * l + 1, 2))
    lowers = (
        Fraction(l + 1) - Fraction(k + n, 2),
        Fraction(1 - n - k, 2) + l,
    )
    total = Fraction(1)
    term = Fraction(1)
    for m in range(k):
        num = [u + m for u in uppers]
        if not all(num):
            break  # an upper Pochhammer terminated the series early
        den = [lo + m for lo in lowers]
        if not all(den):
            raise DegenerateParameters(
                f"lower Pochhammer vanishes at live index m={m + 1} for (n,k,l)=({n},{k},{l})"
            )
        term *= num[0] * num[1] * num[2] / (den[0] * den[1] * (m + 1))
        total += term
    return total


def legendre_operator_apply(k: int, p: ExactPoly) -> ExactPoly:
    """Apply D^k (x^2-1)^k D^k to p, exactly."""
    if k < 0:
        raise ValueError(f"requires k >= 0, got {k}")
    return (_x2m1_power(k) * p.derivative(k)).derivative(k)


def verify_corollary4(n: int, k: int) -> bool:
    """Exact check that P_n is an eigenfunction of D^k (x^2-1)^k D^k with
    eigenvalue (n+k)! / (n-k)!."""
    _check_nk(n, k)
    pn = legendre_poly(n)
    eigenvalue = math.factorial(n + k) // math.factorial(n - k)
    return legendre_operator_apply(k, pn) == eigenvalue * pn


def _check_nk(n: int, k: int) -> None:
    if not 0 <= k <= n:
        raise ValueError(f"requires 0 <= k <= n, got n={n}, k={k}")
