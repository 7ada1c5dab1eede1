"""Exact coefficient arithmetic over the rationals.

Everything downstream (loop-algebra brackets, shift automorphisms, fusion
folding) compares values for exact equality, so this module provides the
substrate: dense polynomials in one variable xi with Fraction coefficients,
reduced rational functions, truncated Laurent expansions at xi = 0, exact
residues, and Laurent "polynomials" whose exponents may be fractions with a
bounded denominator.  No floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

class Polynomial:
    """Dense univariate polynomial over Q, trailing zeros stripped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls([_frac(c)])

    @classmethod
    def monomial(cls, k: int, c=1) -> "Polynomial":
        if k < 0:
            raise ValueError("monomial exponent must be >= 0")
        return cls([Fraction(0)] * k + [_frac(c)])

    @property
    def degree(self) -> int:
        # degree of the zero polynomial is -1 by convention
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero() or other.is_zero():
            return Polynomial([])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        return Polynomial(out)

    def scale(self, c) -> "Polynomial":
        c = _frac(c)
        return Polynomial([c * a for a in self.coeffs])

    def divmod(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Polynomial([]), self
        quot = [Fraction(0)] * (dq + 1)
        lead = other.coeffs[-1]
        for k in range(dq, -1, -1):
            if len(rem) < len(other.coeffs) + k:
                continue
            c = rem[len(other.coeffs) + k - 1] / lead
            if c == 0:
                continue
            quot[k] = c
            for j, b in enumerate(other.coeffs):
                rem[j + k] -= c * b
        while rem and rem[-1] == 0:
            rem.pop()
        return Polynomial(quot), Polynomial(rem)

    def derivative(self) -> "Polynomial":
        return Polynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose_linear(self, shift) -> "Polynomial":
        """p(xi + shift), exact Horner in the shifted variable."""
        shift = _frac(shift)
        acc = Polynomial([])
        lin = Polynomial([shift, Fraction(1)])
        for c in reversed(self.coeffs):
            acc = acc * lin + Polynomial.constant(c)
        return acc

    def order_at_zero(self) -> int:
        """Multiplicity of the root xi = 0 (0 if nonzero constant term)."""
        if self.is_zero():
            raise ValueError("zero polynomial has no finite order")
        k = 0
        while self.coeffs[k] == 0:
            k += 1
        return k

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return self.scale(1 / self.coeffs[-1])

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*xi" if c != 1 else "xi")
            else:
                parts.append(f"{c}*xi^{i}" if c != 1 else f"xi^{i}")
        return " + ".join(parts)


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd by the Euclidean algorithm."""
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic()


ONE = Polynomial([1])
XI = Polynomial([0, 1])


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------

class RationalFunction:
    """Quotient of polynomials in reduced form: monic denominator, gcd 1."""

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial = ONE):
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = Polynomial([]), ONE
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num.divmod(g)[0]
            den = den.divmod(g)[0]
        lead = den.coeffs[-1]
        if lead != 1:
            num = num.scale(1 / lead)
            den = den.scale(1 / lead)
        self.num, self.den = num, den

    @classmethod
    def constant(cls, c) -> "RationalFunction":
        return cls(Polynomial.constant(c))

    @classmethod
    def monomial(cls, n: int, c=1) -> "RationalFunction":
        """c * xi^n for any integer n."""
        if n >= 0:
            return cls(Polynomial.monomial(n, c))
        return cls(Polynomial.constant(c), Polynomial.monomial(-n))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other) -> bool:
        return (isinstance(other, RationalFunction)
                and self.num == other.num and self.den == other.den)

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(self.num * other.num, self.den * other.den)

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise ZeroDivisionError("inverting the zero rational function")
        return RationalFunction(self.den, self.num)

    def scale(self, c) -> "RationalFunction":
        return RationalFunction(self.num.scale(c), self.den)

    def derivative(self) -> "RationalFunction":
        return RationalFunction(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den)

    def compose_linear(self, shift) -> "RationalFunction":
        return RationalFunction(self.num.compose_linear(shift),
                                self.den.compose_linear(shift))

    def order_at_zero(self) -> int:
        """Order of vanishing at 0 (negative for a pole)."""
        if self.is_zero():
            raise ValueError("zero function has no finite order")
        return self.num.order_at_zero() - self.den.order_at_zero()

    def is_polynomial(self) -> bool:
        return self.den == ONE

    def pow(self, k: int) -> "RationalFunction":
        base = self if k >= 0 else self.inverse()
        out = RationalFunction.constant(1)
        for _ in range(abs(k)):
            out = out * base
        return out

    def __repr__(self):
        if self.den == ONE:
            return f"({self.num!r})"
        return f"({self.num!r})/({self.den!r})"


RF_ZERO = RationalFunction(Polynomial([]))
RF_ONE = RationalFunction(ONE)


# ---------------------------------------------------------------------------
# Laurent expansion at xi = 0
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LaurentExpansion:
    """Exact Laurent coefficients of a rational function on [-pole_order, D]."""

    coefficients: tuple  # ((exponent, Fraction), ...) sorted, zeros dropped
    truncation_order: int
    pole_order: int

    def coefficient(self, n: int) -> Fraction:
        if n > self.truncation_order:
            raise ValueError(f"order {n} beyond truncation {self.truncation_order}")
        return dict(self.coefficients).get(n, Fraction(0))


DEFAULT_TRUNCATION = 16


def expand_at_zero(r: RationalFunction, order: int = DEFAULT_TRUNCATION) -> LaurentExpansion:
    """Laurent expansion of r at xi = 0, exact through xi^order.

    Writes den = xi^k * d0 with d0(0) != 0 and divides the numerator power
    series by d0; the result is checked by re-multiplication against the
    source before returning.
    """
    if r.is_zero():
        return LaurentExpansion((), order, 0)
    k = r.den.order_at_zero()
    d0 = Polynomial(r.den.coeffs[k:])
    # series coefficients of num/d0 through degree order + k
    need = order + k + 1
    num = list(r.num.coeffs) + [Fraction(0)] * need
    inv0 = 1 / d0.coeffs[0]
    series = []
    for i in range(need):
        c = num[i]
        for j in range(1, min(i, d0.degree) + 1):
            c -= d0.coeffs[j] * series[i - j]
        series.append(c * inv0)
    pairs = tuple((i - k, c) for i, c in enumerate(series) if c != 0 and i - k <= order)
    exp = LaurentExpansion(pairs, order, k)
    _check_expansion(exp, r)
    return exp


def _check_expansion(exp: LaurentExpansion, source: RationalFunction) -> None:
    # (sum_n c_n xi^n) * den must agree with num through the stored window
    if not exp.coefficients:
        if not source.is_zero():
            lowest = source.order_at_zero()
            if lowest <= exp.truncation_order:
                raise AssertionError("expansion dropped a nonzero coefficient")
        return
    shift = exp.pole_order
    coeffs = [Fraction(0)] * (exp.truncation_order + shift + 1)
    for n, c in exp.coefficients:
        coeffs[n + shift] = c
    prod = Polynomial(coeffs) * source.den
    target = source.num
    for i in range(exp.truncation_order + shift + 1):
        a = prod.coeffs[i] if i < len(prod.coeffs) else Fraction(0)
        b = target.coeffs[i - shift] if 0 <= i - shift < len(target.coeffs) else Fraction(0)
        if a != b:
            raise AssertionError("Laurent expansion disagrees with its source")


def laurent_coefficient(r: RationalFunction, n: int) -> Fraction:
    """Exact coefficient of xi^n in the expansion of r at 0."""
    if r.is_zero():
        return Fraction(0)
    if r.order_at_zero() > n:
        return Fraction(0)
    return expand_at_zero(r, max(n, 0)).coefficient(n)


def residue_at_zero(g: RationalFunction, f: RationalFunction) -> Fraction:
    """Residue at xi = 0 of the 1-form g df, i.e. the xi^-1 coefficient of g f'."""
    return laurent_coefficient(g * f.derivative(), -1)


# ---------------------------------------------------------------------------
# Laurent polynomials with fractional exponents
# ---------------------------------------------------------------------------

class FracLaurent:
    """Finite sum of c * xi^e with e in (1/m)Z.

    Conjugation by diag(xi^{q_1}, ..., xi^{q_N}) multiplies matrix entries by
    monomials whose exponents are differences q_i - q_j; this type carries
    such terms so that integrality of the surviving exponents is a checkable
    predicate rather than an assumption.
    """

    __slots__ = ("terms", "denominator_bound")

    def __init__(self, terms, denominator_bound: int = 1):
        clean = {}
        for e, c in dict(terms).items():
            e, c = _frac(e), _frac(c)
            if e.denominator > denominator_bound:
                raise ValueError(
                    f"exponent {e} outside (1/{denominator_bound})Z")
            if c != 0:
                clean[e] = clean.get(e, Fraction(0)) + c
        self.terms = {e: c for e, c in clean.items() if c != 0}
        self.denominator_bound = denominator_bound

    @classmethod
    def monomial(cls, e, c=1, bound: int | None = None) -> "FracLaurent":
        e = _frac(e)
        return cls({e: c}, bound if bound is not None else max(1, e.denominator))

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, FracLaurent) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "FracLaurent") -> "FracLaurent":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return FracLaurent(out, lcm(self.denominator_bound, other.denominator_bound))

    def __neg__(self):
        return FracLaurent({e: -c for e, c in self.terms.items()},
                           self.denominator_bound)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "FracLaurent") -> "FracLaurent":
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return FracLaurent(out, lcm(self.denominator_bound, other.denominator_bound))

    def exponents(self):
        return sorted(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*xi^{e}" for e, c in sorted(self.terms.items()))


def is_integral_exponents(x: FracLaurent) -> bool:
    """True iff every stored exponent of x is an integer."""
    return all(e.denominator == 1 for e in x.terms)
