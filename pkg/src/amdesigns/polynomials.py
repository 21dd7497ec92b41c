"""Exact polynomial arithmetic.

Two representations, both over exact numbers (Python ints / Fractions, never
floats):

  * ``HomPoly2`` -- a homogeneous bivariate polynomial sum c_i x^(N-i) y^i,
    dense coefficient vector.  Weight enumerators live here.
  * ``RatPoly``  -- a sparse polynomial in the two formal variables n and d
    with rational coefficients, used for the elimination-identity checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import IntegralityError


def _as_exact(c):
    """Normalise an exact scalar: Fractions with denominator 1 become ints."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return c
    raise TypeError(f"exact scalar required, got {type(c).__name__}")


@dataclass(frozen=True)
class HomPoly2:
    """Homogeneous polynomial of fixed degree: coeffs[i] multiplies x^(N-i) y^i."""

    degree: int
    coeffs: tuple

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("degree must be nonnegative")
        if len(self.coeffs) != self.degree + 1:
            raise ValueError("coefficient vector must have length degree + 1")
        object.__setattr__(self, "coeffs", tuple(_as_exact(c) for c in self.coeffs))

    @classmethod
    def zero(cls, degree: int) -> HomPoly2:
        return cls(degree, (0,) * (degree + 1))

    @classmethod
    def from_counts(cls, counts) -> HomPoly2:
        """Enumerator from a weight-count vector A_0..A_n."""
        counts = tuple(counts)
        return cls(len(counts) - 1, counts)

    def coefficient(self, y_power: int):
        """Coefficient of x^(N-w) y^w."""
        if not 0 <= y_power <= self.degree:
            return 0
        return self.coeffs[y_power]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other: HomPoly2) -> HomPoly2:
        if self.degree != other.degree:
            raise ValueError("degree mismatch in homogeneous addition")
        return HomPoly2(self.degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: HomPoly2) -> HomPoly2:
        if self.degree != other.degree:
            raise ValueError("degree mismatch in homogeneous subtraction")
        return HomPoly2(self.degree, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> HomPoly2:
        return HomPoly2(self.degree, tuple(-a for a in self.coeffs))

    def __mul__(self, other: HomPoly2) -> HomPoly2:
        deg = self.degree + other.degree
        out = [0] * (deg + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        return HomPoly2(deg, tuple(out))

    def scale(self, c) -> HomPoly2:
        return HomPoly2(self.degree, tuple(a * c for a in self.coeffs))

    def evaluate(self, x0, y0):
        total = 0
        for i, a in enumerate(self.coeffs):
            if a:
                total += a * x0 ** (self.degree - i) * y0 ** i
        return total

    def substitute_linear(self, a, b, c, e, scale=1) -> HomPoly2:
        """Exact expansion of scale * p(a*x + b*y, c*x + e*y).

        Degree is preserved; all arithmetic stays in ints/Fractions.
        """
        n = self.degree
        # powers of (a x + b y) and (c x + e y), built incrementally
        xs = [HomPoly2(0, (1,))]
        ys = [HomPoly2(0, (1,))]
        lin_x = HomPoly2(1, (a, b))
        lin_y = HomPoly2(1, (c, e))
        for _ in range(n):
            xs.append(xs[-1] * lin_x)
            ys.append(ys[-1] * lin_y)
        out = [0] * (n + 1)
        for i, coef in enumerate(self.coeffs):
            if coef == 0:
                continue
            term = xs[n - i] * ys[i]
            for j, t in enumerate(term.coeffs):
                if t:
                    out[j] += coef * t
        if scale != 1:
            out = [v * scale for v in out]
        return HomPoly2(n, tuple(out))

    def divide_xy(self, k: int) -> HomPoly2:
        """Exact quotient by (x*y)^k; raises if the polynomial is not divisible."""
        if k == 0:
            return self
        if self.degree < 2 * k:
            raise IntegralityError(f"polynomial of degree {self.degree} not divisible by (xy)^{k}")
        head = self.coeffs[:k]
        tail = self.coeffs[self.degree - k + 1:]
        if any(c != 0 for c in head) or any(c != 0 for c in tail):
            raise IntegralityError(f"polynomial not divisible by (xy)^{k}")
        return HomPoly2(self.degree - 2 * k, self.coeffs[k:self.degree - k + 1])

    def __repr__(self) -> str:
        terms = [f"{c}*x^{self.degree - i}y^{i}" for i, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) if terms else "0"


def macwilliams(w: HomPoly2, k: int) -> HomPoly2:
    """Dual weight enumerator 2^-k W(x+y, x-y) of a binary [n, k] enumerator.

    The input must have nonnegative integer coefficients summing to 2^k; the
    output is again integral (anything else signals an inconsistent input).
    """
    if any(not isinstance(c, int) or c < 0 for c in w.coeffs):
        raise ValueError("enumerator coefficients must be nonnegative integers")
    if w.evaluate(1, 1) != 1 << k:
        raise ValueError(f"enumerator evaluates to {w.evaluate(1, 1)} at (1,1), expected 2^{k}")
    out = w.substitute_linear(1, 1, 1, -1, scale=Fraction(1, 1 << k))
    for c in out.coeffs:
        if isinstance(c, Fraction):
            raise IntegralityError("dual enumerator has a non-integer coefficient")
        if c < 0:
            raise IntegralityError("dual enumerator has a negative coefficient")
    return out


class RatPoly:
    """Sparse polynomial in the formal variables n, d over the rationals.

    Keys of the term map are (n-exponent, d-exponent); zero coefficients are
    never stored, so equality is plain map equality.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for key, val in (terms or {}).items():
            val = Fraction(val)
            if val:
                clean[(int(key[0]), int(key[1]))] = val
        object.__setattr__(self, "terms", clean)

    @classmethod
    def const(cls, c) -> RatPoly:
        return cls({(0, 0): Fraction(c)})

    @classmethod
    def var_n(cls) -> RatPoly:
        return cls({(1, 0): Fraction(1)})

    @classmethod
    def var_d(cls) -> RatPoly:
        return cls({(0, 1): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, RatPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == RatPoly.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other) -> RatPoly:
        other = self._coerce(other)
        out = dict(self.terms)
        for key, val in other.terms.items():
            out[key] = out.get(key, Fraction(0)) + val
        return RatPoly(out)

    def __radd__(self, other) -> RatPoly:
        return self + other

    def __neg__(self) -> RatPoly:
        return RatPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other) -> RatPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> RatPoly:
        return self._coerce(other) - self

    def __mul__(self, other) -> RatPoly:
        other = self._coerce(other)
        out = {}
        for (i1, j1), v1 in self.terms.items():
            for (i2, j2), v2 in other.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, Fraction(0)) + v1 * v2
        return RatPoly(out)

    def __rmul__(self, other) -> RatPoly:
        return self * other

    def __pow__(self, e: int) -> RatPoly:
        if e < 0:
            raise ValueError("nonnegative exponent required")
        out = RatPoly.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    @staticmethod
    def _coerce(x) -> RatPoly:
        if isinstance(x, RatPoly):
            return x
        return RatPoly.const(x)

    def evaluate(self, n0, d0) -> Fraction:
        total = Fraction(0)
        for (i, j), v in self.terms.items():
            total += v * Fraction(n0) ** i * Fraction(d0) ** j
        return total

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (i, j), v in sorted(self.terms.items(), reverse=True):
            mono = "".join(s for s, e in (("n", i), ("d", j)) for s in ([f"{s}^{e}"] if e else []))
            parts.append(f"{v}{'*' + mono if mono else ''}")
        return " + ".join(parts)


def binom_poly(p: RatPoly, r: int) -> RatPoly:
    """Falling-factorial binomial C(p, r) = p(p-1)...(p-r+1)/r! as a RatPoly."""
    out = RatPoly.const(1)
    for i in range(r):
        out = out * (p - i)
    return out * Fraction(1, factorial(r))
