"""Exact character values on the block's characteristic-zero members.

Two families are needed: the cuspidal lifts indexed by the nonzero
orbit representatives, and the generalized Steinberg lift sitting in
slot 0.  Values of the cuspidal family live in Q(zeta) at the block's
level; Steinberg values are plain integers.

Conventions for a class type with factor list ((P_1, lam_1), ...):

* cuspidal lifts vanish unless the type is primary (single P);
* on a primary type with deg P = a and x = len(lam) parts the value is
  (-1)^(n-x) * prod_{k=1}^{x-1} (q^{ka} - 1) * sum_{k<a} theta^(i q^k)(t)
  with t a root of P;
* the Steinberg lift vanishes on non-semisimple types and on semisimple
  ones contributes the p-part of the centralizer order with the sign
  (-1)^(n - number of blocks).
"""

from __future__ import annotations

from .classes import ClassType
from .cyclotomic import CyclotomicNumber, zeta
from .errors import AssertionFailure
from .finitefield import ell_part_and_dlog, finite_field, roots_in
from .params import ParameterSet, require_reduced


def cuspidal_dimension(ps: ParameterSet) -> int:
    dim = 1
    for k in range(1, ps.n):
        dim *= ps.q**k - 1
    return dim


def steinberg_dimension(ps: ParameterSet) -> int:
    return ps.q ** (ps.n * (ps.n - 1) // 2)


def theta_exponent(ct: ClassType, ps: ParameterSet) -> int:
    """Discrete log (base the canonical Sylow generator) of the l-part
    of a root of the type's polynomial.  Zero exactly when the root is
    l-regular; well-defined mod l^r up to the q-power orbit."""
    require_reduced(ps)
    poly, _ = ct.factors[0]
    big = finite_field(ps.q**ps.n)
    root = roots_in(poly, big)[0]
    return ell_part_and_dlog(root, ps.ell)


def cuspidal_value(i: int, ct: ClassType, ps: ParameterSet) -> CyclotomicNumber:
    """Value of the slot-i cuspidal lift on the given class type, as an
    element of Q(zeta_{l^r})."""
    require_reduced(ps)
    if not ct.is_primary:
        return CyclotomicNumber.zero(ps.ell, ps.r)
    poly, lam = ct.factors[0]
    a = poly.degree
    x = len(lam)
    scalar = 1
    for k in range(1, x):
        scalar *= ps.q ** (k * a) - 1
    if (ps.n - x) % 2:
        scalar = -scalar
    if a == ps.n:
        j = theta_exponent(ct, ps)
        total = CyclotomicNumber.zero(ps.ell, ps.r)
        for k in range(a):
            total = total + zeta(ps.ell, ps.r, i * j * pow(ps.q, k, ps.ell_power))
        theta_sum = total
    else:
        # roots of smaller degree are l-regular here, so every theta
        # factor is 1 and the orbit sum collapses to its length
        theta_sum = CyclotomicNumber.rational(ps.ell, a).embed_to(ps.r)
    return theta_sum * scalar


def steinberg_value_raw(ct: ClassType, p: int, n: int) -> int:
    """l-free form of the Steinberg value: sign times the p-part of the
    centralizer order on semisimple types, zero elsewhere."""
    if not ct.is_semisimple:
        return 0
    blocks = sum(len(lam) for _, lam in ct.factors)
    p_part = 1
    cent = ct.centralizer_order()
    while cent % p == 0:
        p_part *= p
        cent //= p
    return p_part if (n - blocks) % 2 == 0 else -p_part


def steinberg_value(ct: ClassType, ps: ParameterSet) -> int:
    require_reduced(ps)
    return steinberg_value_raw(ct, ps.p, ps.n)


def dimension_check(ps: ParameterSet, identity_type: ClassType) -> None:
    """The two value formulas must reproduce the dimensions at the
    identity class."""
    val = cuspidal_value(0, identity_type, ps)
    if not val.is_rational() or val.as_rational() != cuspidal_dimension(ps):
        raise AssertionFailure(
            "cuspidal dimension mismatch at identity",
            witness={"value": repr(val), "expected": cuspidal_dimension(ps)},
        )
    st = steinberg_value(identity_type, ps)
    if st != steinberg_dimension(ps):
        raise AssertionFailure(
            "Steinberg dimension mismatch at identity",
            witness={"value": st, "expected": steinberg_dimension(ps)},
        )
