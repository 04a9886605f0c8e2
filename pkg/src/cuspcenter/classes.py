"""Conjugacy class types of GL_n(F_q) and their exact combinatorics.

A conjugacy class of GL_n(F_q) is determined by assigning to finitely
many monic irreducible polynomials P != x over F_q a partition
lambda(P), with sum over P of deg(P) * |lambda(P)| = n.  Centralizer
orders come from the classical product formula: a primary piece with
deg P = a, Q = q^a contributes

    z(Q, lambda) = Q^(|lambda| + 2*n(lambda)) * prod_i prod_{k=1}^{m_i} (1 - Q^-k)

with n(lambda) = sum (i-1) lambda_i and m_i the multiplicity of the
part i.  Class sizes follow by dividing the group order.  The full
enumeration is validated against the generating-function count
prod_j (1 - u^j)/(1 - q u^j).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import ord_int
from .errors import AssertionFailure, ScaleLimit
from .finitefield import FiniteField, FqPoly, finite_field, irreducible_polys, roots_in
from .params import ParameterSet


@lru_cache(maxsize=None)
def partitions(b: int) -> tuple:
    """All partitions of b as descending tuples, in descending lex order."""
    if b == 0:
        return ((),)
    out = []

    def rec(remaining, maxpart, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(remaining, maxpart), 0, -1):
            rec(remaining - part, part, prefix + [part])

    rec(b, b, [])
    return tuple(out)


def group_order(q: int, n: int) -> int:
    order = q ** (n * (n - 1) // 2)
    for k in range(1, n + 1):
        order *= q**k - 1
    return order


def conjugacy_class_count(q: int, n: int) -> int:
    """Coefficient of u^n in prod_{j>=1} (1 - u^j)/(1 - q u^j)."""
    series = [0] * (n + 1)
    series[0] = 1
    for j in range(1, n + 1):
        for k in range(n, j - 1, -1):
            series[k] -= series[k - j]
        for k in range(j, n + 1):
            series[k] += q * series[k - j]
    return series[n]


def _z_factor(big_q: int, lam: tuple) -> int:
    size = sum(lam)
    n_lam = sum(i * part for i, part in enumerate(lam))  # 0-based index = (i-1)
    val = Fraction(big_q) ** (size + 2 * n_lam)
    for _, mult in sorted(Counter(lam).items()):
        for k in range(1, mult + 1):
            val *= 1 - Fraction(1, big_q**k)
    assert val.denominator == 1
    return int(val)


@dataclass(frozen=True)
class ClassType:
    factors: tuple  # ((FqPoly, partition), ...) canonically sorted
    n: int

    @property
    def field(self) -> FiniteField:
        return self.factors[0][0].field

    @property
    def q(self) -> int:
        return self.field.order

    def sort_key(self):
        return tuple(
            (poly.degree, tuple(c.encoding for c in poly.coeffs), lam)
            for poly, lam in self.factors
        )

    def label(self) -> str:
        return "|".join(
            f"{poly!r}:({','.join(map(str, lam))})" for poly, lam in self.factors
        )

    @property
    def is_primary(self) -> bool:
        return len(self.factors) == 1

    @property
    def is_semisimple(self) -> bool:
        return all(set(lam) == {1} for _, lam in self.factors)

    # diagonalizable over the algebraic closure = semisimple
    is_diagonalizable = is_semisimple

    @property
    def degree_profile(self) -> tuple:
        return tuple(sorted((poly.degree, sum(lam)) for poly, lam in self.factors))

    def centralizer_order(self) -> int:
        out = 1
        for poly, lam in self.factors:
            out *= _z_factor(self.q ** poly.degree, lam)
        return out

    def class_size(self) -> int:
        order = group_order(self.q, self.n)
        cent = self.centralizer_order()
        assert order % cent == 0
        return order // cent


def make_class_type(factors, n: int | None = None) -> ClassType:
    factors = tuple(
        sorted(
            ((poly, tuple(sorted(lam, reverse=True))) for poly, lam in factors),
            key=lambda fl: (fl[0].sort_key(), fl[1]),
        )
    )
    total = sum(poly.degree * sum(lam) for poly, lam in factors)
    if n is None:
        n = total
    assert total == n and n > 0
    return ClassType(factors=factors, n=n)


def enumerate_classes(field: FiniteField, n: int, scale_bound: int = 10**6):
    """Every class type of GL_n over ``field``, deterministically
    ordered; the total count is asserted against the generating
    function."""
    if field.order**n > scale_bound:
        raise ScaleLimit(f"class enumeration for GL_{n}(F_{field.order})")
    polys = []
    for a in range(1, n + 1):
        for poly in irreducible_polys(field, a, scale_bound):
            if poly.degree == 1 and not poly.coeffs[0]:
                continue  # exclude x: invertible matrices only
            polys.append(poly)
    out = []

    def rec(idx, budget, chosen):
        if budget == 0:
            out.append(make_class_type(chosen, n))
            return
        if idx == len(polys) or polys[idx].degree > budget:
            return
        rec(idx + 1, budget, chosen)
        a = polys[idx].degree
        for b in range(1, budget // a + 1):
            for lam in partitions(b):
                rec(idx + 1, budget - a * b, chosen + ((polys[idx], lam),))

    rec(0, n, ())
    expected = conjugacy_class_count(field.order, n)
    if len(out) != expected:
        raise AssertionFailure(
            f"enumerated {len(out)} classes, generating function says {expected}"
        )
    assert len(set(out)) == len(out)
    out.sort(key=ClassType.sort_key)
    return tuple(out)


def is_ell_regular(ct: ClassType, ps: ParameterSet) -> bool:
    """True iff the class has order prime to ell.  Eigenvalues of degree
    a < n are automatically ell-regular (ell divides q^a - 1 only for
    a = n); a degree-n eigenvalue is checked by its ell-part dlog."""
    from .finitefield import ell_part_and_dlog

    for poly, _ in ct.factors:
        if poly.degree == ct.n:
            big = finite_field(ct.q**ct.n)
            root = roots_in(poly, big)[0]
            if ell_part_and_dlog(root, ps.ell) != 0:
                return False
    return True


def class_predicates(ct: ClassType, ps: ParameterSet) -> dict:
    """Named predicates for one class; asserts the centralizer-order
    dichotomy: ord_ell(|C|) is r for every class that is not primary
    diagonalizable, and 0 for every class that is."""
    size = ct.class_size()
    cent = ct.centralizer_order()
    exempt = ct.is_primary and ct.is_diagonalizable
    v = ord_int(size, ps.ell) if size % ps.ell == 0 else 0
    if exempt:
        if v != 0:
            raise AssertionFailure(
                f"primary diagonalizable class {ct.label()} has ord_ell(|C|) = {v}",
                witness=ct.label(),
            )
    elif v != ps.r:
        raise AssertionFailure(
            f"class {ct.label()} has ord_ell(|C|) = {v} != r = {ps.r}",
            witness=ct.label(),
        )
    return {
        "label": ct.label(),
        "primary": ct.is_primary,
        "diagonalizable": ct.is_diagonalizable,
        "semisimple": ct.is_semisimple,
        "degree_profile": ct.degree_profile,
        "class_size": size,
        "centralizer_order": cent,
        "ell_regular": is_ell_regular(ct, ps),
    }


def companion(poly: FqPoly):
    """Companion matrix: subdiagonal ones, last column -coefficients."""
    field = poly.field
    m = poly.degree
    rows = [[field.zero] * m for _ in range(m)]
    for i in range(1, m):
        rows[i][i - 1] = field.one
    for i in range(m):
        rows[i][m - 1] = -poly.coeffs[i]
    return tuple(tuple(r) for r in rows)


def representative_matrix(ct: ClassType):
    """Block-diagonal representative: one companion block of P^k for
    each part k of each factor's partition."""
    field = ct.field
    blocks = []
    for poly, lam in ct.factors:
        for part in lam:
            blocks.append(companion(poly**part))
    size = sum(len(b) for b in blocks)
    assert size == ct.n
    rows = [[field.zero] * size for _ in range(size)]
    offset = 0
    for block in blocks:
        w = len(block)
        for i in range(w):
            for j in range(w):
                rows[offset + i][offset + j] = block[i][j]
        offset += w
    return tuple(tuple(r) for r in rows)
