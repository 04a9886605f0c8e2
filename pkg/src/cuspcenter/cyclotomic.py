"""Exact arithmetic in the prime-power cyclotomic tower Q(zeta_{l^i}).

An element is a vector of rationals on the power basis
1, z, ..., z^(phi(l^i) - 1) of Q(zeta_{l^i}), always kept reduced modulo
the cyclotomic polynomial Phi_{l^i}(X) = Phi_l(X^(l^(i-1))).  Level 0 is
plain Q.  Elements of different levels over the same l mix freely: the
lower one embeds via zeta_i = zeta_j^(l^(j-i)).

The l-adic valuation is normalised so that nu(zeta_{l^i} - 1) = 1 at
level i >= 1, hence nu(l) = phi(l^i) and on rationals embedded at level
i the valuation is phi(l^i) times the usual ord_l.  Levels are kept
explicit everywhere for that reason.

>>> z = zeta(3, 1)
>>> (z * z + z + 1).is_zero()
True
>>> ell_valuation(z - 1)
1
>>> ell_valuation(CyclotomicNumber.rational(3, Fraction(-3)).embed_to(1))
2
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .arith import ord_frac
from .errors import ZeroArgument


def phi_prime_power(ell: int, level: int) -> int:
    if level == 0:
        return 1
    m = ell**level
    return m - m // ell


def _reduce(ell: int, level: int, raw) -> tuple:
    """Reduce a dense coefficient list to the power basis at ``level``."""
    if level == 0:
        total = Fraction(0)
        for c in raw:
            total += c
        return (total,)
    m = ell**level
    phi = m - m // ell
    step = m // ell
    folded = [Fraction(0)] * m
    for e, c in enumerate(raw):
        if c:
            folded[e % m] += c
    # X^phi = -(1 + X^step + ... + X^((ell-2)*step)); targets stay < phi
    for e in range(m - 1, phi - 1, -1):
        c = folded[e]
        if c:
            folded[e] = Fraction(0)
            base = e - phi
            for j in range(ell - 1):
                folded[base + j * step] -= c
    return tuple(folded[:phi])


class CyclotomicNumber:
    __slots__ = ("ell", "level", "coeffs")

    def __init__(self, ell: int, level: int, coeffs, reduced: bool = False):
        self.ell = ell
        self.level = level
        if reduced:
            self.coeffs = tuple(coeffs)
        else:
            self.coeffs = _reduce(ell, level, [Fraction(c) for c in coeffs])
        assert len(self.coeffs) == phi_prime_power(ell, level)

    @classmethod
    def rational(cls, ell: int, x) -> "CyclotomicNumber":
        return cls(ell, 0, (Fraction(x),), reduced=True)

    @classmethod
    def zero(cls, ell: int, level: int = 0) -> "CyclotomicNumber":
        n = phi_prime_power(ell, level)
        return cls(ell, level, (Fraction(0),) * n, reduced=True)

    # -- level bookkeeping -------------------------------------------------

    def embed_to(self, level: int) -> "CyclotomicNumber":
        if level == self.level:
            return self
        if level < self.level:
            raise ValueError("can only embed into a higher level")
        if self.level == 0:
            raw = [self.coeffs[0]]
        else:
            stretch = self.ell ** (level - self.level)
            raw = [Fraction(0)] * (stretch * (len(self.coeffs) - 1) + 1)
            for e, c in enumerate(self.coeffs):
                raw[e * stretch] = c
        return CyclotomicNumber(self.ell, level, raw)

    def canonical(self) -> "CyclotomicNumber":
        """Equal element at the smallest possible level."""
        cur = self
        while cur.level >= 1:
            if cur.level == 1:
                if any(cur.coeffs[1:]):
                    return cur
                cur = CyclotomicNumber.rational(cur.ell, cur.coeffs[0])
                continue
            ell = cur.ell
            if any(c for e, c in enumerate(cur.coeffs) if e % ell):
                return cur
            down = cur.coeffs[::ell]
            cur = CyclotomicNumber(ell, cur.level - 1, down, reduced=True)
        return cur

    def as_rational(self) -> Fraction | None:
        c = self.canonical()
        return c.coeffs[0] if c.level == 0 else None

    def is_rational(self) -> bool:
        return self.as_rational() is not None

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            if other.ell != self.ell and other.level > 0 and self.level > 0:
                raise ValueError("mixing cyclotomic towers of different primes")
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.rational(self.ell, other)
        return None

    def _common(self, other):
        lvl = max(self.level, other.level)
        return self.embed_to(lvl), other.embed_to(lvl)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._common(other)
        return CyclotomicNumber(
            a.ell, a.level, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)), reduced=True
        )

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.ell, self.level, tuple(-c for c in self.coeffs), reduced=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._common(other)
        if a.level == 0:
            return CyclotomicNumber(a.ell, 0, (a.coeffs[0] * b.coeffs[0],), reduced=True)
        out = [Fraction(0)] * (2 * len(a.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        out[i + j] += x * y
        return CyclotomicNumber(a.ell, a.level, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = CyclotomicNumber.rational(self.ell, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> "CyclotomicNumber":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        if self.level == 0:
            return CyclotomicNumber.rational(self.ell, 1 / self.coeffs[0])
        m = self._mult_matrix()
        n = len(self.coeffs)
        e0 = [Fraction(int(i == 0)) for i in range(n)]
        sol = linalg.solve_unique(m, e0)
        return CyclotomicNumber(self.ell, self.level, sol, reduced=True)

    def _mult_matrix(self):
        """Matrix of y -> self*y on the power basis (columns indexed by basis)."""
        n = len(self.coeffs)
        cols = []
        for j in range(n):
            shifted = [Fraction(0)] * j + list(self.coeffs)
            cols.append(_reduce(self.ell, self.level, shifted))
        return [[cols[j][i] for j in range(n)] for i in range(n)]

    def norm(self) -> Fraction:
        """Field norm to Q (det of the multiplication-by-self matrix)."""
        if self.level == 0:
            return self.coeffs[0]
        return linalg.determinant(self._mult_matrix())

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._common(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        c = self.canonical()
        if c.level == 0:
            return hash(c.coeffs[0])
        return hash((c.ell, c.level, c.coeffs))

    def __repr__(self):
        c = self.canonical()
        r = c.as_rational()
        if r is not None:
            return str(r)
        terms = []
        for e, x in enumerate(c.coeffs):
            if x == 0:
                continue
            z = f"z{c.ell ** c.level}"
            mono = "1" if e == 0 else (z if e == 1 else f"{z}^{e}")
            terms.append(mono if x == 1 and e else f"{x}*{mono}" if e else str(x))
        return " + ".join(terms).replace("+ -", "- ")


def zeta(ell: int, level: int, exponent: int = 1) -> CyclotomicNumber:
    """zeta_{l^level}^exponent as a reduced power-basis vector."""
    if level == 0:
        return CyclotomicNumber.rational(ell, 1)
    m = ell**level
    e = exponent % m
    raw = [Fraction(0)] * (e + 1)
    raw[e] = Fraction(1)
    return CyclotomicNumber(ell, level, raw)


def ell_valuation(x: CyclotomicNumber) -> int:
    """Normalised l-adic valuation: nu(zeta - 1) = 1, nu(l) = phi(l^i)."""
    if x.is_zero():
        raise ZeroArgument("valuation of zero")
    if x.level == 0:
        return ord_frac(x.coeffs[0], x.ell)
    return ord_frac(x.norm(), x.ell)


def is_ell_integral(x: CyclotomicNumber) -> bool:
    """True iff x lies in the l-local ring of integers Z_(l)[zeta].

    The power basis is an integral basis for Q(zeta_{l^i}), so this is
    exactly "every coefficient has denominator prime to l".
    """
    return all(c.denominator % x.ell != 0 for c in x.coeffs)


def congruent_mod(x: CyclotomicNumber, y: CyclotomicNumber, modulus) -> bool:
    """x = y mod ``modulus`` in the l-local integers (modulus rational)."""
    scaled = (x - y) * (1 / Fraction(modulus))
    return is_ell_integral(scaled)
