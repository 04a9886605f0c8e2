"""The q-power-invariant subring of W(k)[Z/l^r] and its presentation.

R = W(k)[X]/(X^(l^r) - 1) carries the ring endomorphism X^b -> X^(qb).
Because ord(q) = n in (Z/l^i)^x for every 1 <= i <= r, the orbits of
multiplication by q on Z/l^r are {0} and (l^r - 1)/n further orbits of
size exactly n, and the invariant subring has the orbit sums as a
W(k)-basis.  Everything here is computed over Q with exact rationals;
l-integrality is asserted where the theory demands it.

Main outputs:
  * orbit_structure     - the orbits, with the order facts asserted
  * trace_element       - f = X + X^q + ... + X^(q^(n-1))
  * omega_and_min_poly  - zeta-trace at level i and its minimal poly m_i
  * min_polynomial      - m = (Y - n) * prod_i m_i, degree = #orbits
  * invariant_ring      - change of basis between orbit sums and powers
                          of f, invertible with l-integral inverse
  * express_orbit_sum   - h with h(f) = given orbit sum, l-integral
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import linalg
from .arith import ord_frac
from .cyclotomic import CyclotomicNumber, ell_valuation, phi_prime_power, zeta
from .errors import AssertionFailure, IntegralityFailure
from .params import ParameterSet, require_reduced
from .polynomials import Poly, from_roots


class GroupRingElement:
    """Element of Q[X]/(X^modulus - 1), dense rational coefficients."""

    __slots__ = ("modulus", "coeffs")

    def __init__(self, modulus: int, coeffs):
        self.modulus = modulus
        cs = tuple(Fraction(c) for c in coeffs)
        assert len(cs) == modulus
        self.coeffs = cs

    @classmethod
    def unit(cls, modulus: int, exponent: int = 0, scale=1):
        cs = [Fraction(0)] * modulus
        cs[exponent % modulus] = Fraction(scale)
        return cls(modulus, cs)

    def _coerce(self, other):
        if isinstance(other, GroupRingElement):
            assert other.modulus == self.modulus
            return other
        if isinstance(other, (int, Fraction)):
            return GroupRingElement.unit(self.modulus, 0, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GroupRingElement(
            self.modulus, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    __radd__ = __add__

    def __neg__(self):
        return GroupRingElement(self.modulus, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GroupRingElement(self.modulus, tuple(a * other for a in self.coeffs))
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        m = self.modulus
        out = [Fraction(0)] * m
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[(i + j) % m] += a * b
        return GroupRingElement(m, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = GroupRingElement.unit(self.modulus, 0, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.modulus, self.coeffs))

    def is_zero(self):
        return not any(self.coeffs)

    def frobenius(self, a: int) -> "GroupRingElement":
        """The map X^b -> X^(ab)."""
        m = self.modulus
        out = [Fraction(0)] * m
        for e, c in enumerate(self.coeffs):
            if c:
                out[e * a % m] += c
        return GroupRingElement(m, out)

    def is_ell_integral(self, ell: int) -> bool:
        return all(c.denominator % ell != 0 for c in self.coeffs)

    def __repr__(self):
        terms = [
            f"{c}*X^{e}" if e else str(c) for e, c in enumerate(self.coeffs) if c
        ]
        return " + ".join(terms) if terms else "0"


@dataclass(frozen=True)
class OrbitStructure:
    modulus: int
    multiplier: int
    orbits: tuple[tuple[int, ...], ...]
    reps: tuple[int, ...]
    rep_map: tuple[int, ...]

    def rep_of(self, a: int) -> int:
        return self.rep_map[a % self.modulus]

    def orbit_sum(self, a: int) -> GroupRingElement:
        rep = self.rep_of(a)
        orbit = self.orbits[self.reps.index(rep)]
        cs = [Fraction(0)] * self.modulus
        for e in orbit:
            cs[e] = Fraction(1)
        return GroupRingElement(self.modulus, cs)


def orbit_structure(ps: ParameterSet) -> OrbitStructure:
    """Orbits of multiplication by q on Z/l^r, with the order facts
    (every nonzero orbit has size exactly n) verified exhaustively."""
    ps = require_reduced(ps)
    m = ps.ell_power
    q = ps.q % m
    seen = [False] * m
    orbits = []
    rep_map = [0] * m
    for a in range(m):
        if seen[a]:
            continue
        orbit = []
        b = a
        while not seen[b]:
            seen[b] = True
            orbit.append(b)
            b = b * q % m
        orbits.append(tuple(sorted(orbit)))
        for e in orbit:
            rep_map[e] = min(orbit)
    for orbit in orbits:
        if orbit != (0,) and len(orbit) != ps.n:
            raise AssertionFailure(
                f"orbit {orbit} has size {len(orbit)} != n = {ps.n}", witness=orbit
            )
    expected = 1 + (m - 1) // ps.n
    if len(orbits) != expected:
        raise AssertionFailure(f"{len(orbits)} orbits, expected {expected}")
    reps = tuple(o[0] for o in orbits)
    assert reps == tuple(sorted(reps)) and reps[0] == 0
    return OrbitStructure(
        modulus=m, multiplier=q, orbits=tuple(orbits), reps=reps, rep_map=tuple(rep_map)
    )


def is_invariant(v: GroupRingElement, orbits: OrbitStructure) -> bool:
    return v.frobenius(orbits.multiplier) == v


def trace_element(ps: ParameterSet) -> GroupRingElement:
    ps = require_reduced(ps)
    m = ps.ell_power
    cs = [Fraction(0)] * m
    for k in range(ps.n):
        cs[pow(ps.q, k, m)] += 1
    return GroupRingElement(m, cs)


def omega_value(ps: ParameterSet, i: int) -> CyclotomicNumber:
    """Trace of zeta_{l^i} under the q-power orbit: sum of zeta^(q^k)."""
    ps = require_reduced(ps)
    assert 1 <= i <= ps.r
    m = ps.ell**i
    total = CyclotomicNumber.zero(ps.ell, i)
    for k in range(ps.n):
        total = total + zeta(ps.ell, i, pow(ps.q, k, m))
    return total


def omega_and_min_poly(ps: ParameterSet, i: int):
    """(omega_i, m_i) where m_i is the minimal polynomial of omega_i.

    m_i is built as the product over cosets a<q> of (Z/l^i)^x of
    (Y - sum_j zeta^(a q^j)); its coefficients must come out as plain
    integers, which is asserted.
    """
    ps = require_reduced(ps)
    ell, n = ps.ell, ps.n
    m = ell**i
    subgroup = sorted(pow(ps.q, k, m) for k in range(n))
    if len(set(subgroup)) != n:
        raise AssertionFailure(f"ord of q mod l^{i} is below n", witness=i)
    units = [a for a in range(1, m) if a % ell != 0]
    assigned = set()
    conj_sums = []
    for a in units:
        if a in assigned:
            continue
        coset = {a * h % m for h in subgroup}
        assigned |= coset
        total = CyclotomicNumber.zero(ell, i)
        for e in sorted(coset):
            total = total + zeta(ell, i, e)
        conj_sums.append(total)
    coeffs = from_roots(conj_sums)
    rational_coeffs = []
    for c in coeffs:
        if isinstance(c, CyclotomicNumber):
            rc = c.as_rational()
            if rc is None:
                raise AssertionFailure(f"m_{i} coefficient not rational: {c!r}")
        else:
            rc = Fraction(c)
        if rc.denominator != 1:
            raise AssertionFailure(f"m_{i} coefficient not an integer: {rc}")
        rational_coeffs.append(rc)
    m_i = Poly(rational_coeffs)
    assert m_i.degree == phi_prime_power(ell, i) // n
    omega = omega_value(ps, i)
    value = m_i(omega)
    if not (value * 1).is_zero():
        raise AssertionFailure(f"m_{i}(omega_{i}) != 0", witness=i)
    return omega, m_i


def min_polynomial(ps: ParameterSet):
    """(m, factors) with m = (Y - n) * prod_{i=1}^r m_i.

    Asserts: integer coefficients, degree = number of orbits, and
    m = (Y - n)^ceil(l^r / n) mod l.
    """
    ps = require_reduced(ps)
    factors = [Poly((-ps.n, 1))]
    omegas = []
    for i in range(1, ps.r + 1):
        omega, m_i = omega_and_min_poly(ps, i)
        factors.append(m_i)
        omegas.append(omega)
    m = Poly((1,))
    for f in factors:
        m = m * f
    degree_expected = 1 + (ps.ell_power - 1) // ps.n
    if m.degree != degree_expected:
        raise AssertionFailure(f"deg m = {m.degree}, expected {degree_expected}")
    if not m.has_integer_coeffs():
        raise AssertionFailure("m has non-integer coefficients")
    # mod-l shape: (Y - n)^D
    ell = ps.ell
    d = m.degree
    binom = [comb(d, k) * pow(-ps.n, d - k, ell) % ell for k in range(d + 1)]
    if m.reduce_mod(ell) != tuple(binom):
        raise AssertionFailure("m mod l is not (Y - n)^D")
    return m, factors, omegas


def uniformizer_check(ps: ParameterSet, i: int) -> dict:
    """nu(omega_i - n) must be exactly n at level i; also checks the
    auxiliary product N(zeta_i) = prod_k (zeta^(q^k) - 1) has nu = n."""
    ps = require_reduced(ps)
    omega = omega_value(ps, i)
    val = ell_valuation(omega - ps.n)
    if val != ps.n:
        raise AssertionFailure(
            f"nu(omega_{i} - n) = {val} != n = {ps.n}", witness={"level": i, "nu": val}
        )
    m = ps.ell**i
    prod = CyclotomicNumber.rational(ps.ell, 1)
    for k in range(ps.n):
        prod = prod * (zeta(ps.ell, i, pow(ps.q, k, m)) - 1)
    aux = ell_valuation(prod)
    if aux != ps.n:
        raise AssertionFailure(f"nu(N(zeta_{i})) = {aux} != n", witness={"level": i})
    return {"level": i, "valuation": val, "aux_valuation": aux}


def pullback_mod_ell_check(ps: ParameterSet) -> dict:
    """Multiplicity of (X - 1) in X + X^q + ... + X^(q^(n-1)) - n over
    F_l, as an abstract polynomial (no reduction mod X^(l^r) - 1).
    Must be exactly n."""
    ps = require_reduced(ps)
    ell = ps.ell
    deg = ps.q ** (ps.n - 1)
    coeffs = [0] * (deg + 1)
    for k in range(ps.n):
        coeffs[ps.q**k] = (coeffs[ps.q**k] + 1) % ell
    coeffs[0] = (coeffs[0] - ps.n) % ell
    multiplicity = 0
    cur = coeffs
    while True:
        # synthetic division by (X - 1) mod l
        acc = 0
        quo = [0] * (len(cur) - 1)
        for k in range(len(cur) - 1, 0, -1):
            acc = (acc + cur[k]) % ell
            quo[k - 1] = acc
        rem = (acc + cur[0]) % ell
        if rem != 0:
            break
        multiplicity += 1
        cur = quo
        if len(cur) == 1:
            if cur[0] == 0 and multiplicity:
                raise AssertionFailure("pullback polynomial vanished entirely")
            break
    if multiplicity != ps.n:
        raise AssertionFailure(
            f"(X-1)-multiplicity is {multiplicity}, expected n = {ps.n}",
            witness={"multiplicity": multiplicity},
        )
    return {"multiplicity": multiplicity, "degree": deg}


@dataclass(frozen=True)
class InvariantRingData:
    ps: ParameterSet
    orbits: OrbitStructure
    f: GroupRingElement
    m: Poly
    m_factors: tuple[Poly, ...]
    omegas: tuple[CyclotomicNumber, ...]
    basis_matrix: tuple[tuple[Fraction, ...], ...]
    basis_matrix_inv: tuple[tuple[Fraction, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.orbits.reps)


def invariant_ring(ps: ParameterSet) -> InvariantRingData:
    """Change-of-basis data between {orbit sums} and {1, f, ..., f^(D-1)}.

    M[j][k] = coefficient of X^(rep_j) in f^k.  Asserts that every f^k
    is q-invariant, that M is invertible over Q, and that M^(-1) is
    l-integral; also that m(f) = 0 in the group ring.
    """
    ps = require_reduced(ps)
    orbits = orbit_structure(ps)
    f = trace_element(ps)
    m, factors, omegas = min_polynomial(ps)
    d = len(orbits.reps)
    powers = [GroupRingElement.unit(orbits.modulus, 0, 1)]
    for _ in range(d - 1):
        powers.append(powers[-1] * f)
    for k, fk in enumerate(powers):
        if not is_invariant(fk, orbits):
            raise AssertionFailure(f"f^{k} is not q-invariant")
    rows = []
    for rep in orbits.reps:
        rows.append(tuple(fk.coeffs[rep] for fk in powers))
    inverse = linalg.invert([list(r) for r in rows])
    for row in inverse:
        for entry in row:
            if entry and ord_frac(entry, ps.ell) < 0:
                raise IntegralityFailure(
                    f"basis-change inverse entry {entry} is not l-integral"
                )
    mf = m(f)
    if not (mf * 1).is_zero():
        raise AssertionFailure("m(f) != 0 in the group ring")
    return InvariantRingData(
        ps=ps,
        orbits=orbits,
        f=f,
        m=m,
        m_factors=tuple(factors),
        omegas=tuple(omegas),
        basis_matrix=tuple(tuple(r) for r in rows),
        basis_matrix_inv=tuple(tuple(r) for r in inverse),
    )


def express_orbit_sum(data: InvariantRingData, a: int) -> Poly:
    """h of degree < D with h(f) = the orbit sum of X^a, l-integral."""
    d = data.dimension
    rep = data.orbits.rep_of(a)
    target = [Fraction(int(r == rep)) for r in data.orbits.reps]
    sol = linalg.solve_unique([list(r) for r in data.basis_matrix], target)
    h = Poly(sol)
    if not h.is_ell_integral(data.ps.ell):
        raise IntegralityFailure(f"certificate for orbit of {a} not l-integral")
    if not (h(data.f) - data.orbits.orbit_sum(a)).is_zero():
        raise AssertionFailure(f"h(f) does not reproduce the orbit sum of {a}")
    return h
