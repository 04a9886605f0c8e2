"""Finite fields F_{p^e} with deterministic construction.

Each field is F_p[u] modulo one fixed monic irreducible per (p, e): the
first irreducible in integer-encoding order, where a monic polynomial
u^e + c_{e-1} u^{e-1} + ... + c_0 is encoded by sum(c_k p^k).  Elements
are coefficient tuples over F_p; their integer encoding gives the
deterministic enumeration order used for every "first element such
that" choice below (subfield embeddings, Sylow generators, roots).

Subfields embed by sending the small field's generator to the smallest
root of its modulus in the big field.  All such choices are pure
functions of (p, e), so independent runs agree.
"""

from __future__ import annotations

from math import gcd

from .arith import divisors, is_prime, ord_int, prime_power
from .errors import ScaleLimit, ZeroElement

# ---------------------------------------------------------------------------
# F_p[x] on plain integer tuples (low degree first), for modulus hunting
# ---------------------------------------------------------------------------


def _pp_trim(cs):
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _pp_mulmod(a, b, mod, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _pp_rem(out, mod, p)


def _pp_rem(a, mod, p):
    a = list(a)
    dm = len(mod) - 1
    inv_lead = pow(mod[-1], -1, p)
    for i in range(len(a) - dm - 1, -1, -1):
        c = a[i + dm] * inv_lead % p
        if c:
            for j, mj in enumerate(mod):
                a[i + j] = (a[i + j] - c * mj) % p
    return _pp_trim(a[:dm])


def _pp_is_irreducible(cand, p):
    """Monic ``cand`` irreducible over F_p?  Trial division by every
    monic polynomial of degree 1..deg/2 (desk scale keeps this cheap)."""
    e = len(cand) - 1
    for deg in range(1, e // 2 + 1):
        for enc in range(p**deg):
            div = _decode_poly(enc, deg, p) + (1,)
            if not _pp_rem(cand, div, p):
                return False
    return True


def _decode_poly(enc, length, p):
    out = []
    for _ in range(length):
        out.append(enc % p)
        enc //= p
    return tuple(out)


def smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    """The fixed monic modulus for F_{p^e}: first irreducible in
    integer-encoding order of the non-leading coefficients."""
    if e == 1:
        return (0, 1)
    for enc in range(p**e):
        cand = _decode_poly(enc, e, p) + (1,)
        if _pp_is_irreducible(cand, p):
            return cand
    raise AssertionError("no irreducible found; unreachable")


# ---------------------------------------------------------------------------
# fields and elements
# ---------------------------------------------------------------------------

_FIELDS: dict[tuple[int, int], "FiniteField"] = {}  # write-once registry


def finite_field(q: int) -> "FiniteField":
    pe = prime_power(q)
    if pe is None:
        raise ValueError(f"{q} is not a prime power")
    p, e = pe
    if pe not in _FIELDS:
        _FIELDS[pe] = FiniteField(p, e)
    return _FIELDS[pe]


class FiniteField:
    def __init__(self, p: int, e: int):
        assert is_prime(p)
        self.p = p
        self.e = e
        self.order = p**e
        self.modulus = smallest_irreducible(p, e)
        self.zero = FFElement(self, (0,) * e)
        self.one = FFElement(self, (1,) + (0,) * (e - 1))
        self._embeddings: dict[tuple[int, int], dict] = {}
        self._irreducibles: dict[int, tuple] = {}
        self._sylow: dict[int, tuple] = {}

    def element(self, encoding: int) -> "FFElement":
        return FFElement(self, _decode_poly(encoding, self.e, self.p))

    def from_coeffs(self, coeffs) -> "FFElement":
        cs = tuple(c % self.p for c in coeffs)
        assert len(cs) == self.e
        return FFElement(self, cs)

    def elements(self):
        for enc in range(self.order):
            yield self.element(enc)

    def units(self):
        for enc in range(1, self.order):
            yield self.element(enc)

    def __repr__(self):
        return f"GF({self.order})"

    def __eq__(self, other):
        return isinstance(other, FiniteField) and (self.p, self.e) == (other.p, other.e)

    def __hash__(self):
        return hash(("GF", self.p, self.e))


class FFElement:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: FiniteField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    @property
    def encoding(self) -> int:
        enc = 0
        for c in reversed(self.coeffs):
            enc = enc * self.field.p + c
        return enc

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, FFElement)
            and self.field is other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field.p, self.field.e, self.coeffs))

    def __lt__(self, other):
        assert self.field is other.field
        return self.encoding < other.encoding

    def __add__(self, other):
        if isinstance(other, int):
            other = self.field.from_coeffs((other,) + (0,) * (self.field.e - 1))
        p = self.field.p
        return FFElement(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FFElement(self.field, tuple(-a % p for a in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.field.from_coeffs((other,) + (0,) * (self.field.e - 1))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            s = other % self.field.p
            return FFElement(self.field, tuple(a * s % self.field.p for a in self.coeffs))
        assert self.field is other.field
        f = self.field
        prod = _pp_mulmod(_pp_trim(self.coeffs), _pp_trim(other.coeffs), f.modulus, f.p)
        return f.from_coeffs(prod + (0,) * (f.e - len(prod)))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out, base = self.field.one, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> "FFElement":
        if not self:
            raise ZeroDivisionError("inverse of zero field element")
        return self ** (self.field.order - 2)

    def __truediv__(self, other):
        return self * other.inverse()

    def multiplicative_order(self) -> int:
        if not self:
            raise ZeroElement("order of zero")
        n = self.field.order - 1
        o = n
        x = n
        f = 2
        while f * f <= x:
            if x % f == 0:
                while x % f == 0:
                    x //= f
                while o % f == 0 and (self ** (o // f)) == self.field.one:
                    o //= f
            f += 1
        if x > 1 and o % x == 0 and (self ** (o // x)) == self.field.one:
            o //= x
        return o

    def __repr__(self):
        return f"{self.field!r}:{self.encoding}"


# ---------------------------------------------------------------------------
# embeddings between fields of the same characteristic
# ---------------------------------------------------------------------------


def embedding(src: FiniteField, dst: FiniteField) -> dict:
    """The deterministic field embedding src -> dst as a lookup dict.

    Sends the source generator to the smallest root of the source
    modulus in dst.  Requires src.e | dst.e.
    """
    key = (src.p, src.e)
    if key in dst._embeddings:
        return dst._embeddings[key]
    assert src.p == dst.p and dst.e % src.e == 0
    if src is dst:
        table = {x: x for x in src.elements()}
        dst._embeddings[key] = table
        return table
    root = None
    for t in dst.elements():
        acc = dst.zero
        for c in reversed(src.modulus):
            acc = acc * t + c
        if not acc:
            root = t
            break
    assert root is not None, "source modulus has no root in destination"
    powers = [dst.one]
    for _ in range(src.e - 1):
        powers.append(powers[-1] * root)
    table = {}
    for x in src.elements():
        img = dst.zero
        for c, tp in zip(x.coeffs, powers):
            img = img + tp * c
        table[x] = img
    dst._embeddings[key] = table
    return table


def inverse_embedding(src: FiniteField, dst: FiniteField) -> dict:
    return {v: k for k, v in embedding(src, dst).items()}


# ---------------------------------------------------------------------------
# polynomials over a finite field
# ---------------------------------------------------------------------------


class FqPoly:
    """Dense polynomial over a FiniteField, low degree first, trimmed."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FiniteField, coeffs):
        self.field = field
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def from_encodings(cls, field, encs):
        return cls(field, tuple(field.element(e) for e in encs))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def sort_key(self):
        return (self.degree, tuple(c.encoding for c in self.coeffs))

    def __eq__(self, other):
        return (
            isinstance(other, FqPoly)
            and self.field is other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field.p, self.field.e, tuple(c.encoding for c in self.coeffs)))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        merged = tuple(x + y for x, y in zip(a, b)) + a[len(b):]
        return FqPoly(self.field, merged)

    def __neg__(self):
        return FqPoly(self.field, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, FFElement):
            return FqPoly(self.field, tuple(c * other for c in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return FqPoly(self.field, ())
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + x * y
        return FqPoly(self.field, out)

    def __pow__(self, k: int):
        out = FqPoly(self.field, (self.field.one,))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other: "FqPoly"):
        if not other.coeffs:
            raise ZeroDivisionError
        rem = list(self.coeffs)
        dv = other.coeffs
        dd = len(dv) - 1
        inv_lead = dv[-1].inverse()
        quo = [self.field.zero] * max(0, len(rem) - dd)
        for i in range(len(rem) - dd - 1, -1, -1):
            c = rem[i + dd] * inv_lead
            if c:
                quo[i] = c
                for j, b in enumerate(dv):
                    rem[i + j] = rem[i + j] - c * b
        return FqPoly(self.field, quo), FqPoly(self.field, rem[:dd])

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x: FFElement):
        acc = x.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def map_coeffs(self, table, field):
        return FqPoly(field, tuple(table[c] for c in self.coeffs))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            enc = c.encoding
            if k == 0:
                parts.append(str(enc))
            else:
                mono = "x" if k == 1 else f"x^{k}"
                parts.append(mono if enc == 1 else f"{enc}*{mono}")
        return "+".join(parts)


def irreducible_polys(field: FiniteField, a: int, scale_bound: int = 10**6):
    """All monic irreducible polynomials of degree a over ``field``,
    in deterministic (coefficient-encoding) order.  Includes x."""
    if a in field._irreducibles:
        return field._irreducibles[a]
    q = field.order
    if q**a > scale_bound:
        raise ScaleLimit(f"irreducible_polys over GF({q}) at degree {a}")
    smaller = []
    for b in range(1, a // 2 + 1):
        smaller.extend(irreducible_polys(field, b, scale_bound))
    out = []
    for enc in range(q**a):
        digits = []
        x = enc
        for _ in range(a):
            digits.append(x % q)
            x //= q
        cand = FqPoly(field, tuple(field.element(d) for d in digits) + (field.one,))
        if all((cand % small).coeffs for small in smaller):
            out.append(cand)
    from .arith import moebius

    expected = sum(moebius(a // b) * q**b for b in divisors(a)) // a
    assert len(out) == expected, f"irreducible count off at degree {a} over GF({q})"
    field._irreducibles[a] = tuple(out)
    return field._irreducibles[a]


def roots_in(poly: FqPoly, big: FiniteField) -> list[FFElement]:
    """Roots of ``poly`` (coeffs in a subfield of ``big``) inside big,
    in deterministic element order."""
    table = embedding(poly.field, big)
    lifted = poly.map_coeffs(table, big)
    return [t for t in big.elements() if not lifted(t)]


def minimal_polynomial(t: FFElement, sub: FiniteField) -> FqPoly:
    """Minimal polynomial of t over the subfield ``sub``."""
    big = t.field
    q = sub.order
    orbit = [t]
    x = t**q
    while x != t:
        orbit.append(x)
        x = x**q
    coeffs = [big.one]
    for root in orbit:
        shifted = [big.zero] + coeffs
        for k, c in enumerate(coeffs):
            shifted[k] = shifted[k] - root * c
        coeffs = shifted
    back = inverse_embedding(sub, big)
    return FqPoly(sub, tuple(back[c] for c in coeffs))


# ---------------------------------------------------------------------------
# ell-part decomposition and discrete logs
# ---------------------------------------------------------------------------


def sylow_generator(field: FiniteField, ell: int):
    """(eps, r, dlog) where eps is the first element in encoding order
    of multiplicative order exactly l^r, l^r the ell-part of |F^x|, and
    dlog maps each l-power-order element to its exponent on eps."""
    if ell in field._sylow:
        return field._sylow[ell]
    n = field.order - 1
    r = ord_int(n, ell) if n % ell == 0 else 0
    target = ell**r
    eps = None
    for t in field.units():
        if t.multiplicative_order() == target:
            eps = t
            break
    assert eps is not None
    dlog = {}
    x = field.one
    for k in range(target):
        dlog[x] = k
        x = x * eps
    field._sylow[ell] = (eps, r, dlog)
    return field._sylow[ell]


def ell_part_and_dlog(t: FFElement, ell: int) -> int:
    """j such that the ell-part of t is eps^j for the deterministic
    Sylow generator eps of t's field."""
    if not t:
        raise ZeroElement("ell-part of zero")
    field = t.field
    eps, r, dlog = sylow_generator(field, ell)
    n = field.order - 1
    lr = ell**r
    m = n // lr
    # 1 = alpha*l^r + beta*m  ->  t = t^(alpha*l^r) * t^(beta*m)
    beta = pow(m, -1, lr) if lr > 1 else 0
    t_ell = t ** (beta * m % n) if n > 1 else field.one
    j = dlog[t_ell]
    t_reg = t * (eps**j).inverse()
    assert gcd(t_reg.multiplicative_order(), ell) == 1
    return j
