"""Exact arithmetic kernels.

Arbitrary-precision rationals (``fractions.Fraction``), binomials and rising
factorials, sparse multivariate polynomials over Q in the fixed variable set
``(a, b, t, x)``, and rational functions of those polynomials with formal
differentiation.

Everything here is exact.  Rational functions are deliberately *not* reduced
to lowest terms: equality is decided by cross-multiplication, which avoids
multivariate GCD while keeping the zero test sound.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Mapping, Union

VARS = ("a", "b", "t", "x")
_VAR_INDEX = {v: i for i, v in enumerate(VARS)}

Scalar = Union[int, Fraction]


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k); 0 for k outside [0, n]."""
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def rising_factorial(a: Scalar, n: int) -> Fraction:
    """Rising factorial a(a+1)...(a+n-1); the empty product (n=0) is 1."""
    if n < 0:
        raise ValueError(f"rising_factorial requires n >= 0, got n={n}")
    a = Fraction(a)
    out = Fraction(1)
    for i in range(n):
        out *= a + i
    return out


def _check_var(v: str) -> int:
    if v not in _VAR_INDEX:
        raise ValueError(f"unknown variable {v!r}; expected one of {VARS}")
    return _VAR_INDEX[v]


class MultiPoly:
    """Sparse multivariate polynomial over Q in the variables (a, b, t, x).

    Terms map exponent 4-tuples to nonzero Fraction coefficients.  Instances
    are immutable; all operations return new polynomials.  ``terms()`` lists
    terms in graded-lexicographic order (variable order a < b < t < x), so
    equal polynomials print identically.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple, Scalar] | None = None):
        clean: dict[tuple, Fraction] = {}
        if terms:
            for exps, coeff in terms.items():
                exps = tuple(exps)
                if len(exps) != len(VARS):
                    raise ValueError(f"exponent tuple {exps} must have length {len(VARS)}")
                if any((not isinstance(e, int)) or e < 0 for e in exps):
                    raise ValueError(f"exponents must be nonnegative integers, got {exps}")
                c = Fraction(coeff)
                if c:
                    acc = clean.get(exps)
                    clean[exps] = c if acc is None else acc + c
                    if not clean[exps]:
                        del clean[exps]
        object.__setattr__(self, "_terms", clean)

    # -- constructors -------------------------------------------------------

    @classmethod
    def constant(cls, c: Scalar) -> "MultiPoly":
        return cls({(0, 0, 0, 0): Fraction(c)})

    @classmethod
    def variable(cls, v: str) -> "MultiPoly":
        i = _check_var(v)
        exps = [0, 0, 0, 0]
        exps[i] = 1
        return cls({tuple(exps): Fraction(1)})

    @staticmethod
    def coerce(value: "MultiPoly | Scalar") -> "MultiPoly":
        if isinstance(value, MultiPoly):
            return value
        return MultiPoly.constant(value)

    # -- inspection ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def terms(self) -> list[tuple[tuple, Fraction]]:
        """Terms in graded-lex order: higher total degree first, then
        lexicographically greater exponent tuple first."""
        return sorted(
            self._terms.items(),
            key=lambda kv: (-sum(kv[0]), tuple(-e for e in kv[0])),
        )

    def coefficient(self, exps: tuple) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        other = MultiPoly.coerce(other)
        out = dict(self._terms)
        for exps, c in other._terms.items():
            s = out.get(exps, Fraction(0)) + c
            if s:
                out[exps] = s
            else:
                out.pop(exps, None)
        p = MultiPoly.__new__(MultiPoly)
        object.__setattr__(p, "_terms", out)
        return p

    __radd__ = __add__

    def __neg__(self):
        p = MultiPoly.__new__(MultiPoly)
        object.__setattr__(p, "_terms", {e: -c for e, c in self._terms.items()})
        return p

    def __sub__(self, other):
        return self + (-MultiPoly.coerce(other))

    def __rsub__(self, other):
        return MultiPoly.coerce(other) - self

    def __mul__(self, other):
        other = MultiPoly.coerce(other)
        out: dict[tuple, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3])
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        p = MultiPoly.__new__(MultiPoly)
        object.__setattr__(p, "_terms", out)
        return p

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"polynomial power must be a nonnegative integer, got {n}")
        result = MultiPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- calculus and evaluation --------------------------------------------

    def diff(self, v: str) -> "MultiPoly":
        """Formal partial derivative with respect to variable v."""
        i = _check_var(v)
        out: dict[tuple, Fraction] = {}
        for exps, c in self._terms.items():
            e = exps[i]
            if e:
                ne = list(exps)
                ne[i] = e - 1
                out[tuple(ne)] = c * e
        p = MultiPoly.__new__(MultiPoly)
        object.__setattr__(p, "_terms", out)
        return p

    def subs(self, v: str, value: "MultiPoly | Scalar") -> "MultiPoly":
        """Substitute a polynomial or rational constant for variable v."""
        i = _check_var(v)
        value = MultiPoly.coerce(value)
        # group by exponent of v, then multiply by value**e
        powers: dict[int, MultiPoly] = {}
        out = MultiPoly()
        for exps, c in self._terms.items():
            e = exps[i]
            ne = list(exps)
            ne[i] = 0
            rest = MultiPoly({tuple(ne): c})
            if e not in powers:
                powers[e] = value**e
            out = out + rest * powers[e]
        return out

    def evaluate(self, values: Mapping[str, Scalar]) -> Fraction:
        """Exact value at a rational point; every variable that occurs with a
        positive exponent must be present in ``values``."""
        total = Fraction(0)
        for exps, c in self._terms.items():
            term = c
            for i, e in enumerate(exps):
                if e:
                    term *= Fraction(values[VARS[i]]) ** e
            total += term
        return total

    # -- protocol -----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for exps, c in self.terms():
            mono = "*".join(
                f"{VARS[i]}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(exps)
                if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        out = " + ".join(parts)
        return out.replace("+ -", "- ")

    def __repr__(self):
        return f"MultiPoly({self})"


#: Convenience handles for the four fixed variables and the unit polynomial.
A = MultiPoly.variable("a")
B = MultiPoly.variable("b")
T = MultiPoly.variable("t")
X = MultiPoly.variable("x")
ONE = MultiPoly.constant(1)


def poly_diff(p: MultiPoly, v: str) -> MultiPoly:
    """Formal partial derivative of a polynomial."""
    return p.diff(v)


class RatFunc:
    """Ratio of two MultiPoly values; the denominator is nonzero as a
    polynomial.  Never reduced; equality is by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly | Scalar, den: MultiPoly | Scalar = 1):
        num = MultiPoly.coerce(num)
        den = MultiPoly.coerce(den)
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @staticmethod
    def coerce(value: "RatFunc | MultiPoly | Scalar") -> "RatFunc":
        if isinstance(value, RatFunc):
            return value
        return RatFunc(value)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __add__(self, other):
        other = RatFunc.coerce(other)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RatFunc.coerce(other))

    def __rsub__(self, other):
        return RatFunc.coerce(other) - self

    def __mul__(self, other):
        other = RatFunc.coerce(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RatFunc.coerce(other)
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RatFunc.coerce(other) / self

    def diff(self, v: str) -> "RatFunc":
        """Quotient rule: (num' den - num den') / den**2."""
        return RatFunc(
            self.num.diff(v) * self.den - self.num * self.den.diff(v),
            self.den * self.den,
        )

    def subs(self, v: str, value: MultiPoly | Scalar) -> "RatFunc":
        return RatFunc(self.num.subs(v, value), self.den.subs(v, value))

    def evaluate(self, values: Mapping[str, Scalar]) -> Fraction:
        d = self.den.evaluate(values)
        if not d:
            raise ZeroDivisionError(f"denominator vanishes at {dict(values)}")
        return self.num.evaluate(values) / d

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, MultiPoly)):
            other = RatFunc.coerce(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return (self.num * other.den) == (other.num * self.den)

    def __hash__(self):
        raise TypeError("RatFunc is unhashable: equality is up to cross-multiplication")

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self):
        return f"RatFunc({self})"


def ratfunc_diff(f: RatFunc, v: str) -> RatFunc:
    """Formal partial derivative of a rational function."""
    return f.diff(v)


def ratfunc_equal(f: RatFunc, g: RatFunc) -> bool:
    """True iff f.num * g.den equals g.num * f.den exactly."""
    return RatFunc.coerce(f) == RatFunc.coerce(g)
