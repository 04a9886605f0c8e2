"""Center-of-the-block engine: delta vectors, case analysis, and the
reconstruction of the endomorphism ring.

Every conjugacy class sum acts on each characteristic-zero member of
the block by a scalar; collecting those scalars over the block's slots
(slot 0 for the generalized Steinberg member, one slot per nonzero
orbit representative for the cuspidal members) gives the class's delta
vector.  The engine computes every delta vector exactly, checks the
required integrality and congruence properties case by case, rebuilds
the scaled idempotent and the distinguished generator gamma from
realized vectors, certifies each delta as an integral polynomial in
gamma, and packages the result: the image of the center is W[Y]/(m(Y))
with m the minimal polynomial computed from the invariant ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import ord_frac
from .characters import (
    cuspidal_dimension,
    cuspidal_value,
    steinberg_dimension,
    steinberg_value,
    theta_exponent,
)
from .classes import ClassType, class_predicates, enumerate_classes
from .cyclotomic import CyclotomicNumber, ell_valuation, is_ell_integral, zeta
from .errors import AssertionFailure, IntegralityFailure, NoSolution
from .finitefield import finite_field, minimal_polynomial, sylow_generator
from .invariants import (
    InvariantRingData,
    invariant_ring,
    pullback_mod_ell_check,
    uniformizer_check,
)
from .linalg import solve_unique
from .params import ParameterSet, reduce_parameters, require_reduced
from .polynomials import Poly


class BlockVector:
    """Vector of scalars indexed by the block's slots.

    Entries are stored uniformly at level r; slot 0 comes first and the
    remaining slots follow the orbit-representative order."""

    __slots__ = ("ell", "r", "reps", "entries")

    def __init__(self, ell: int, r: int, reps, entries):
        self.ell = ell
        self.r = r
        self.reps = tuple(reps)
        embedded = []
        for e in entries:
            if not isinstance(e, CyclotomicNumber):
                e = CyclotomicNumber.rational(ell, Fraction(e))
            embedded.append(e.embed_to(r))
        self.entries = tuple(embedded)
        assert len(self.entries) == len(self.reps)

    @property
    def entry0(self) -> CyclotomicNumber:
        return self.entries[0]

    def __add__(self, other: "BlockVector") -> "BlockVector":
        assert self.reps == other.reps
        return BlockVector(
            self.ell, self.r, self.reps,
            [a + b for a, b in zip(self.entries, other.entries)],
        )

    def __sub__(self, other: "BlockVector") -> "BlockVector":
        assert self.reps == other.reps
        return BlockVector(
            self.ell, self.r, self.reps,
            [a - b for a, b in zip(self.entries, other.entries)],
        )

    def scale(self, c) -> "BlockVector":
        return BlockVector(self.ell, self.r, self.reps, [e * c for e in self.entries])

    def __eq__(self, other) -> bool:
        if not isinstance(other, BlockVector):
            return NotImplemented
        return self.reps == other.reps and all(
            a == b for a, b in zip(self.entries, other.entries)
        )

    def __hash__(self):
        return hash((self.reps, self.entries))

    def is_ell_integral(self) -> bool:
        return all(is_ell_integral(e) for e in self.entries)

    def rational_entries(self):
        return tuple(e.as_rational() for e in self.entries)

    def __repr__(self) -> str:
        return "(" + ", ".join(repr(e) for e in self.entries) + ")"


def block_slots(ps: ParameterSet):
    """Slot labels: 0 then the nonzero orbit representatives."""
    from .invariants import orbit_structure

    return orbit_structure(ps).reps


def delta_class(ct: ClassType, ps: ParameterSet, reps=None) -> BlockVector:
    """Delta vector of one class: |C| chi(C) / dim, slot by slot.

    Raises IntegralityFailure if any entry is not l-integral and
    AssertionFailure if the entries fail to agree in the residue field;
    both properties hold for every class of the group.
    """
    ps = require_reduced(ps)
    if reps is None:
        reps = block_slots(ps)
    size = ct.class_size()
    st = Fraction(size * steinberg_value(ct, ps), steinberg_dimension(ps))
    entries = [CyclotomicNumber.rational(ps.ell, st)]
    dim = cuspidal_dimension(ps)
    for i in reps[1:]:
        val = cuspidal_value(i, ct, ps)
        entries.append(val * Fraction(size, dim))
    vec = BlockVector(ps.ell, ps.r, reps, entries)
    for slot, e in zip(vec.reps, vec.entries):
        if not is_ell_integral(e):
            raise IntegralityFailure(
                f"delta entry at slot {slot} of {ct.label()} is not l-integral"
            )
    e0 = vec.entry0
    for slot, e in zip(vec.reps[1:], vec.entries[1:]):
        diff = e - e0
        if not diff.is_zero() and ell_valuation(diff) < 1:
            raise AssertionFailure(
                f"delta entries of {ct.label()} differ in the residue field",
                witness={"slot": slot},
            )
    return vec


def s_membership(vec: BlockVector) -> bool:
    """Membership in S = W*1 + W*(scaled idempotent): all nonzero slots
    equal and rational, everything l-integral, and slot 0 congruent to
    the common value mod l^r."""
    vals = vec.rational_entries()
    if any(v is None for v in vals):
        return False
    e0, tail = vals[0], vals[1:]
    if any(v != tail[0] for v in tail):
        return False
    ell = vec.ell
    for v in (e0, tail[0]):
        if v != 0 and ord_frac(v, ell) < 0:
            return False
    diff = tail[0] - e0
    return diff == 0 or ord_frac(diff, ell) >= vec.r


REALIZED_WITNESS = "realized-witness"
NON_PRIMARY = "non-primary"
PRIMARY_SMALL_NONDIAG = "primary-small-nondiagonalizable"
PRIMARY_SMALL_DIAG = "primary-small-diagonalizable"
DEGREE_N = "degree-n"

BUCKETS = (REALIZED_WITNESS, NON_PRIMARY, PRIMARY_SMALL_NONDIAG, PRIMARY_SMALL_DIAG, DEGREE_N)


def case_bucket(ct: ClassType, ps: ParameterSet) -> str:
    if len(ct.factors) > 1:
        return NON_PRIMARY
    poly, lam = ct.factors[0]
    if poly.degree == ps.n:
        return DEGREE_N
    if poly.degree == 1 and not (poly.coeffs[0] + poly.field.one) and lam == (ps.n,):
        # polynomial is x - 1 with a single full-size block
        return REALIZED_WITNESS
    if all(part == 1 for part in lam):
        return PRIMARY_SMALL_DIAG
    return PRIMARY_SMALL_NONDIAG


@dataclass(frozen=True)
class CaseReport:
    bucket_of: dict
    bucket_counts: dict
    s_flags: dict
    witness_label: str
    witness_unit: Fraction


def case_analysis(ps: ParameterSet, deltas: dict) -> CaseReport:
    """deltas: class type -> BlockVector.  Checks the per-bucket shape
    of every vector; S-membership is asserted on the non-primary and
    both small-degree primary buckets, recorded (but deliberately not
    asserted either way) on the degree-n bucket, and the witness bucket
    must consist of the single regular-unipotent class whose vector is
    (0, u*l^r, ..., u*l^r) with u an l-unit.
    """
    ps = require_reduced(ps)
    bucket_of = {}
    counts = {b: 0 for b in BUCKETS}
    s_flags = {}
    witness_label = None
    witness_unit = None
    lr = Fraction(ps.ell_power)
    for ct, vec in deltas.items():
        bucket = case_bucket(ct, ps)
        label = ct.label()
        bucket_of[label] = bucket
        counts[bucket] += 1
        flag = s_membership(vec)
        s_flags[label] = flag
        if bucket == REALIZED_WITNESS:
            if not vec.entry0.is_zero():
                raise AssertionFailure(
                    "witness vector has nonzero Steinberg slot", witness=label
                )
            vals = vec.rational_entries()
            tail = vals[1:]
            if any(v is None or v != tail[0] for v in tail):
                raise AssertionFailure(
                    "witness vector is not constant on cuspidal slots", witness=label
                )
            if ord_frac(tail[0], ps.ell) != ps.r:
                raise AssertionFailure(
                    f"witness valuation is {ord_frac(tail[0], ps.ell)}, expected r = {ps.r}",
                    witness=label,
                )
            witness_label = label
            witness_unit = tail[0] / lr
        elif bucket == NON_PRIMARY:
            if any(not e.is_zero() for e in vec.entries[1:]):
                raise AssertionFailure(
                    "cuspidal slots must vanish on a non-primary class", witness=label
                )
            if not flag:
                raise AssertionFailure(
                    "non-primary class outside S", witness=label
                )
        elif bucket in (PRIMARY_SMALL_DIAG, PRIMARY_SMALL_NONDIAG):
            if not flag:
                raise AssertionFailure(
                    f"{bucket} class outside S", witness=label
                )
    if counts[REALIZED_WITNESS] != 1:
        raise AssertionFailure(
            f"expected exactly one realized-witness class, found {counts[REALIZED_WITNESS]}"
        )
    return CaseReport(
        bucket_of=bucket_of,
        bucket_counts=counts,
        s_flags=s_flags,
        witness_label=witness_label,
        witness_unit=witness_unit,
    )


def lemma_signs_check(ps: ParameterSet) -> list:
    """For every factorization n = v * d the unit
    prod_{k=1}^{v-1}(q^{dk} - 1) / v must be congruent to
    q^(n(v-1)/2) mod l^r.  Checked as ord_l(lhs - rhs) >= r."""
    ps = require_reduced(ps)
    out = []
    for v in range(1, ps.n + 1):
        if ps.n % v:
            continue
        d = ps.n // v
        lhs = Fraction(1, v)
        for k in range(1, v):
            lhs *= ps.q ** (d * k) - 1
        rhs = Fraction(ps.q ** (ps.n * (v - 1) // 2))
        diff = lhs - rhs
        if diff != 0 and ord_frac(diff, ps.ell) < ps.r:
            raise AssertionFailure(
                f"sign congruence fails at (v, d) = ({v}, {d})",
                witness={"lhs": str(lhs), "rhs": str(rhs)},
            )
        out.append({"v": v, "d": d, "lhs": lhs, "rhs": rhs})
    return out


def one_vector(ps: ParameterSet) -> BlockVector:
    reps = block_slots(ps)
    return BlockVector(ps.ell, ps.r, reps, [1] * len(reps))


def gamma_vector(ps: ParameterSet) -> BlockVector:
    """Slot 0 carries n; slot i carries sum_k zeta^(i q^k)."""
    ps = require_reduced(ps)
    reps = block_slots(ps)
    m = ps.ell_power
    entries = [CyclotomicNumber.rational(ps.ell, ps.n)]
    for i in reps[1:]:
        total = CyclotomicNumber.zero(ps.ell, ps.r)
        for k in range(ps.n):
            total = total + zeta(ps.ell, ps.r, i * pow(ps.q, k, m))
        entries.append(total)
    return BlockVector(ps.ell, ps.r, reps, entries)


def theta_orbit_vector(ps: ParameterSet, j: int) -> BlockVector:
    """Expected action vector of a degree-n class with theta exponent j:
    slot 0 is n, slot i is sum_k zeta^(i j q^k)."""
    ps = require_reduced(ps)
    reps = block_slots(ps)
    m = ps.ell_power
    entries = [CyclotomicNumber.rational(ps.ell, ps.n)]
    for i in reps[1:]:
        total = CyclotomicNumber.zero(ps.ell, ps.r)
        for k in range(ps.n):
            total = total + zeta(ps.ell, ps.r, i * j * pow(ps.q, k, m))
        entries.append(total)
    return BlockVector(ps.ell, ps.r, reps, entries)


def reconstruct_scaled_idempotent(ps: ParameterSet, witness: BlockVector):
    """From the regular-unipotent delta vector (0, u l^r, ..., u l^r)
    rebuild l^r * e_0 = l^r * 1 - (1/u) * delta as an element of the
    image; returns (vector, unit u)."""
    ps = require_reduced(ps)
    if not witness.entry0.is_zero():
        raise AssertionFailure("witness vector must vanish in slot 0")
    vals = witness.rational_entries()[1:]
    if any(v is None or v != vals[0] for v in vals):
        raise AssertionFailure("witness vector must be constant on cuspidal slots")
    unit = vals[0] / ps.ell_power
    if ord_frac(unit, ps.ell) != 0:
        raise AssertionFailure(f"witness scalar {vals[0]} is not l^r times a unit")
    idem = one_vector(ps).scale(ps.ell_power) - witness.scale(1 / unit)
    expected = [Fraction(ps.ell_power)] + [0] * (len(witness.reps) - 1)
    if idem.rational_entries() != tuple(Fraction(e) for e in expected):
        raise AssertionFailure("scaled idempotent has the wrong shape", witness=repr(idem))
    return idem, unit


def reconstruct_gamma(
    ps: ParameterSet,
    ct: ClassType,
    vec: BlockVector,
    scaled_idem: BlockVector,
) -> dict:
    """Chain of moves recovering the theta-orbit vector of a degree-n
    class from its delta vector: divide by the sign/unit scalar, then
    subtract the l-integral multiple of the scaled idempotent that
    corrects slot 0 to n.  Every step is asserted exactly."""
    ps = require_reduced(ps)
    size = ct.class_size()
    unit = Fraction(size * (-1) ** (ps.n - 1), cuspidal_dimension(ps))
    if ord_frac(unit, ps.ell) != 0:
        raise AssertionFailure(
            f"|C|/dim is not an l-unit on {ct.label()}", witness=str(unit)
        )
    w = vec.scale(1 / unit)
    w0 = w.entry0.as_rational()
    if w0 is None:
        raise AssertionFailure("normalized Steinberg slot is not rational")
    c = (w0 - ps.n) / ps.ell_power
    if ord_frac(c, ps.ell) < 0:
        raise AssertionFailure(
            f"idempotent correction {c} is not l-integral on {ct.label()}"
        )
    candidate = w - scaled_idem.scale(c)
    j = theta_exponent(ct, ps)
    expected = theta_orbit_vector(ps, j)
    if candidate != expected:
        raise AssertionFailure(
            f"reconstruction of {ct.label()} missed its theta-orbit vector",
            witness={"got": repr(candidate), "expected": repr(expected)},
        )
    return {
        "label": ct.label(),
        "theta_exponent": j,
        "unit": unit,
        "steinberg_slot": w0,
        "correction": c,
    }


def _coordinate_rows(vectors, phi):
    """Flatten block vectors to rational rows, one row per (slot,
    power-basis coordinate)."""
    rows = []
    count = len(vectors[0].entries)
    for s in range(count):
        for c in range(phi):
            row = []
            for v in vectors:
                e = v.entries[s]
                row.append(e.coeffs[c] if c < len(e.coeffs) else Fraction(0))
            rows.append(row)
    return rows


def express_in_gamma(vec: BlockVector, gamma_pows, ps: ParameterSet) -> Poly:
    """The unique h with deg h < D and h(gamma) = vec, as an l-integral
    polynomial; NoSolution if vec is outside Q[gamma], IntegralityFailure
    if the coordinates exist but are not l-integral."""
    from .cyclotomic import phi_prime_power

    phi = phi_prime_power(ps.ell, ps.r)
    rows = _coordinate_rows(gamma_pows, phi)
    rhs = []
    for s in range(len(vec.entries)):
        for c in range(phi):
            e = vec.entries[s]
            rhs.append(e.coeffs[c] if c < len(e.coeffs) else Fraction(0))
    sol = solve_unique(rows, rhs)
    h = Poly(sol)
    if not h.is_ell_integral(ps.ell):
        raise IntegralityFailure("gamma-certificate is not l-integral")
    for s in range(len(vec.entries)):
        acc = CyclotomicNumber.zero(ps.ell, ps.r)
        for coeff, pw in zip(sol, gamma_pows):
            acc = acc + pw.entries[s] * coeff
        if not (acc - vec.entries[s]).is_zero():
            raise AssertionFailure("gamma-certificate fails to reproduce the vector")
    return h


def gamma_power_basis(gamma: BlockVector, count: int):
    """[1, gamma, gamma^2, ...] as block vectors (entrywise powers)."""
    reps = gamma.reps
    ell, r = gamma.ell, gamma.r
    powers = [BlockVector(ell, r, reps, [1] * len(reps))]
    while len(powers) < count:
        prev = powers[-1]
        powers.append(
            BlockVector(ell, r, reps, [a * b for a, b in zip(prev.entries, gamma.entries)])
        )
    return powers


def evaluate_poly_vector(h: Poly, gamma: BlockVector) -> BlockVector:
    return BlockVector(
        gamma.ell, gamma.r, gamma.reps, [h(e) for e in gamma.entries]
    )


def minimality_certificate(ring: InvariantRingData, gamma: BlockVector) -> dict:
    """Proof that m is THE minimal polynomial of gamma acting on the
    block: the D slot values are pairwise distinct (so any annihilating
    polynomial has degree >= D), deg m = D, and m(gamma) = 0.  As a
    cross-check, dropping any single irreducible factor of m leaves a
    polynomial that no longer kills gamma."""
    d = ring.dimension
    if ring.m.degree != d:
        raise AssertionFailure(f"deg m = {ring.m.degree} but there are {d} slots")
    for a in range(d):
        for b in range(a + 1, d):
            if gamma.entries[a] == gamma.entries[b]:
                raise AssertionFailure(
                    f"gamma slots {gamma.reps[a]} and {gamma.reps[b]} coincide"
                )
    mg = evaluate_poly_vector(ring.m, gamma)
    if any(not e.is_zero() for e in mg.entries):
        raise AssertionFailure("m(gamma) != 0")
    dropped = []
    for factor in ring.m_factors:
        quotient = ring.m.exact_div(factor)
        vals = evaluate_poly_vector(quotient, gamma)
        if all(e.is_zero() for e in vals.entries):
            raise AssertionFailure(
                f"m/{factor!r} still annihilates gamma — m is not minimal"
            )
        dropped.append(repr(factor))
    return {"degree": d, "distinct_slots": True, "proper_divisors_checked": dropped}


def g_of_gamma_check(ring: InvariantRingData, gamma: BlockVector) -> dict:
    """g = m / (Y - n) must vanish on every cuspidal slot while its
    Steinberg value g(n) has l-valuation exactly r."""
    ps = ring.ps
    g = ring.m.exact_div(Poly((-ps.n, 1)))
    vals = evaluate_poly_vector(g, gamma)
    for slot, e in zip(vals.reps[1:], vals.entries[1:]):
        if not e.is_zero():
            raise AssertionFailure(f"g(gamma) nonzero at cuspidal slot {slot}")
    g_n = vals.entry0.as_rational()
    if g_n is None or g_n == 0:
        raise AssertionFailure("g(n) must be a nonzero rational")
    if ord_frac(g_n, ps.ell) != ps.r:
        raise AssertionFailure(
            f"ord_l g(n) = {ord_frac(g_n, ps.ell)}, expected r = {ps.r}"
        )
    return {"g": repr(g), "g_at_n": g_n, "valuation": ps.r}


@dataclass(frozen=True)
class EndoRingResult:
    params_input: ParameterSet
    params: ParameterSet
    ring: InvariantRingData
    classes: tuple
    class_info: dict
    deltas: dict
    case_report: CaseReport
    signs: list
    scaled_idempotent: BlockVector
    idempotent_unit: Fraction
    gamma: BlockVector
    minimality: dict
    reconstructions: list
    certificates: dict
    g_report: dict
    checks: tuple


def verify_endo_ring(
    q: int, ell: int, n: int, d: int = 1, scale_bound: int = 10**6
) -> EndoRingResult:
    """Full pipeline: validate and reduce parameters, build the
    invariant ring, enumerate classes, compute and classify all delta
    vectors, reconstruct the generator, and certify the presentation."""
    from .params import validate_parameters

    ps_input = validate_parameters(q, ell, n, d)
    ps = reduce_parameters(ps_input)
    checks = []

    ring = invariant_ring(ps)
    checks.append("invariant-ring: basis change and min poly verified")
    for level in range(1, ps.r + 1):
        uniformizer_check(ps, level)
    checks.append("uniformizer: nu(omega - n) = n at every level")
    pullback_mod_ell_check(ps)
    checks.append("pullback: (X-1)-multiplicity equals n mod l")

    field = finite_field(ps.q)
    classes = enumerate_classes(field, ps.n, scale_bound)
    class_info = {ct.label(): class_predicates(ct, ps) for ct in classes}
    checks.append(f"classes: {len(classes)} types, centralizer orders verified")

    reps = ring.orbits.reps
    deltas = {ct: delta_class(ct, ps, reps) for ct in classes}
    checks.append("delta: all vectors l-integral and residue-consistent")

    case_report = case_analysis(ps, deltas)
    checks.append("case analysis: bucket shapes verified")
    signs = lemma_signs_check(ps)
    checks.append("sign congruences: all divisor pairs verified")

    witness_ct = next(
        ct for ct in classes if case_report.bucket_of[ct.label()] == REALIZED_WITNESS
    )
    scaled_idem, idem_unit = reconstruct_scaled_idempotent(ps, deltas[witness_ct])
    checks.append("scaled idempotent reconstructed from the witness class")

    gamma = gamma_vector(ps)
    minimality = minimality_certificate(ring, gamma)
    checks.append("gamma: minimal polynomial certified")

    big = finite_field(ps.q**ps.n)
    eps, r_found, _ = sylow_generator(big, ps.ell)
    if r_found != ps.r:
        raise AssertionFailure("Sylow depth mismatch in the big field")
    eps_poly = minimal_polynomial(eps, field)
    reconstructions = []
    found_eps_class = False
    for ct in classes:
        if case_report.bucket_of[ct.label()] != DEGREE_N:
            continue
        if theta_exponent(ct, ps) == 0:
            continue
        rec = reconstruct_gamma(ps, ct, deltas[ct], scaled_idem)
        reconstructions.append(rec)
        if ct.factors[0][0] == eps_poly:
            found_eps_class = True
            if theta_orbit_vector(ps, rec["theta_exponent"]) != gamma:
                raise AssertionFailure(
                    "class of the canonical Sylow generator does not rebuild gamma"
                )
    if not found_eps_class:
        raise AssertionFailure("no class carries the canonical Sylow generator")
    if not reconstructions:
        raise AssertionFailure("no l-singular degree-n class found")
    checks.append(
        f"gamma reconstruction: {len(reconstructions)} l-singular classes replayed"
    )

    gamma_pows = gamma_power_basis(gamma, ring.dimension)
    certificates = {}
    for ct in classes:
        h = express_in_gamma(deltas[ct], gamma_pows, ps)
        certificates[ct.label()] = h
    checks.append("closure: every delta vector is an l-integral polynomial in gamma")

    g_report = g_of_gamma_check(ring, gamma)
    checks.append("g = m/(Y - n): vanishes on cuspidal slots, ord g(n) = r")

    return EndoRingResult(
        params_input=ps_input,
        params=ps,
        ring=ring,
        classes=tuple(classes),
        class_info=class_info,
        deltas={ct.label(): vec for ct, vec in deltas.items()},
        case_report=case_report,
        signs=signs,
        scaled_idempotent=scaled_idem,
        idempotent_unit=idem_unit,
        gamma=gamma,
        minimality=minimality,
        reconstructions=reconstructions,
        certificates=certificates,
        g_report=g_report,
        checks=tuple(checks),
    )
