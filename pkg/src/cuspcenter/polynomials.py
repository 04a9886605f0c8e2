"""Dense univariate polynomials with exact rational coefficients.

Coefficients are stored low degree first and kept trimmed; the zero
polynomial has an empty coefficient tuple and degree -1.  Evaluation is
generic Horner, so a Poly can be evaluated at anything that supports
addition and multiplication with Fraction (cyclotomic numbers, group
ring elements, other polynomials).
"""

from __future__ import annotations

from fractions import Fraction

from .arith import ord_frac
from .errors import DegreeMismatch


def _trim(cs):
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _trim(Fraction(c) for c in coeffs)

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly((other,))
        return NotImplemented

    def __hash__(self):
        return hash(("Poly", self.coeffs))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly((other,))
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly(tuple(x + y for x, y in zip(a, b)) + a[len(b):])

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other if isinstance(other, Poly) else Poly((-Fraction(other),)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, Poly):
            return NotImplemented
        if not self or not other:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out, base = Poly((1,)), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other: "Poly"):
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dv = other.coeffs
        dd = len(dv) - 1
        lead = dv[-1]
        quo = [Fraction(0)] * max(0, len(rem) - dd)
        for i in range(len(rem) - dd - 1, -1, -1):
            c = rem[i + dd] / lead
            if c:
                quo[i] = c
                for j, b in enumerate(dv):
                    rem[i + j] -= c * b
        return Poly(quo), Poly(rem[:dd])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = divmod(self, other)
        if r:
            raise DegreeMismatch(f"{self} is not divisible by {other}")
        return q

    def __call__(self, x):
        """Horner evaluation; works for any Fraction-compatible ring."""
        if not self.coeffs:
            return 0 * x if not isinstance(x, (int, Fraction)) else Fraction(0)
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def has_integer_coeffs(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def is_ell_integral(self, ell: int) -> bool:
        return all(c == 0 or ord_frac(c, ell) >= 0 for c in self.coeffs)

    def reduce_mod(self, ell: int) -> tuple[int, ...]:
        """Coefficients mod ell (requires ell-integral coefficients)."""
        out = []
        for c in self.coeffs:
            den_inv = pow(c.denominator % ell, -1, ell)
            out.append(c.numerator * den_inv % ell)
        return _trim(out)

    def derivative(self) -> "Poly":
        return Poly(tuple(k * c for k, c in enumerate(self.coeffs))[1:])

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                mono = "Y" if k == 1 else f"Y^{k}"
                if c == 1:
                    parts.append(mono)
                elif c == -1:
                    parts.append(f"-{mono}")
                else:
                    parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def from_roots(roots) -> list:
    """Coefficients (low degree first) of the monic prod of (Y - t).

    Roots may live in any commutative Fraction-algebra; the returned
    coefficients live there too.
    """
    coeffs = [Fraction(1)]
    for t in roots:
        shifted = [Fraction(0)] + coeffs  # multiply by Y
        for k, c in enumerate(coeffs):
            shifted[k] = shifted[k] - t * c
        coeffs = shifted
    return coeffs
