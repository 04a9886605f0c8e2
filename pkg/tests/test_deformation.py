"""Matrix deformation points and the emitted center presentation."""

import pytest

from cuspcenter.cyclotomic import CyclotomicNumber, ell_valuation, zeta
from cuspcenter.deformation import (
    check_relations,
    deformation_suite,
    emit_center_presentation,
    make_point,
)
from cuspcenter.errors import AssertionFailure
from cuspcenter.invariants import invariant_ring
from cuspcenter.params import validate_parameters


def test_p1_point_a1():
    ps = validate_parameters(2, 3, 2)
    pt = make_point(ps, 1)
    # trace = zeta + zeta^2 = -1
    assert pt.trace.as_rational() == -1
    # T_1 = trace of Fr = 0 for the pure shift
    assert pt.t_values[0].is_zero()
    # T_2 = (-1)^2 det Fr; shift with unit entries 1 has det -1
    assert pt.t_values[1].as_rational() == -1
    ring = invariant_ring(ps)
    report = check_relations(pt, ps, ring)
    assert report["zeta_exponent"] == 1


def test_p1_point_a0():
    ps = validate_parameters(2, 3, 2)
    pt = make_point(ps, 0)
    assert pt.trace.as_rational() == 2  # Y = n on the Steinberg sheet
    ring = invariant_ring(ps)
    check_relations(pt, ps, ring)


def test_p2_point_a3():
    ps = validate_parameters(2, 7, 3)
    ring = invariant_ring(ps)
    pt = make_point(ps, 3)
    # trace is the second Gauss period; m kills it
    assert (ring.m(pt.trace) * 1).is_zero()
    assert pt.t_values[0].is_zero()  # T_1
    assert pt.t_values[1].is_zero()  # T_2
    assert ell_valuation(pt.t_values[2]) == 0  # T_3 is an l-unit
    check_relations(pt, ps, ring)


def test_units_enter_determinant():
    ps = validate_parameters(2, 7, 3)
    pt = make_point(ps, 1, units=(2, -1, 1))
    # n = 3: det Fr = product of units = -2 (3-cycle is even), and
    # T_3 = (-1)^n det Fr = 2
    assert pt.t_values[2].as_rational() == 2
    ring = invariant_ring(ps)
    check_relations(pt, ps, ring)


def test_commutation_relation_is_tight():
    # a wrong diagonal (not the q-power ladder) must be rejected
    from cuspcenter.errors import RelationFailure
    from cuspcenter.matrices import mat_mul

    ps = validate_parameters(2, 3, 2)
    pt = make_point(ps, 1)
    zero = CyclotomicNumber.zero(3, 1)
    bad_psi = (
        (zeta(3, 1, 1), zero),
        (zero, zeta(3, 1, 1)),  # should be zeta^(q) = zeta^2
    )
    lhs = mat_mul(pt.fr, bad_psi, zero)
    psi_q = (
        (zeta(3, 1, 2), zero),
        (zero, zeta(3, 1, 2)),
    )
    rhs = mat_mul(psi_q, pt.fr, zero)
    assert any(
        not (lhs[i][j] - rhs[i][j]).is_zero() for i in range(2) for j in range(2)
    )


@pytest.mark.parametrize(
    "q,ell,n",
    [(2, 3, 2), (2, 7, 3), (8, 3, 2), (4, 5, 2), (3, 5, 4)],
)
def test_deformation_suite(q, ell, n):
    ps = validate_parameters(q, ell, n)
    ring = invariant_ring(ps)
    report = deformation_suite(ps, ring)
    assert report["points_checked"] == ps.ell_power * 3**n
    assert report["distinct_traces"] == ring.m.degree
    assert report["styles"] == ("quotient-ideal", "parameter-ideal")


def test_presentation_describe_p1():
    ps = validate_parameters(2, 3, 2)
    ring = invariant_ring(ps)
    pres = emit_center_presentation(ring)
    assert pres.generators == ("Y", "T1", "T2^(+-1)")
    text = pres.describe()
    assert text == "W[Y, T1, T2^(+-1)] / <m(Y) = -2 - Y + Y^2; (Y - 2) * (T1)>"


def test_presentation_describe_p2():
    ps = validate_parameters(2, 7, 3)
    ring = invariant_ring(ps)
    pres = emit_center_presentation(ring, style="parameter-ideal")
    assert pres.style == "parameter-ideal"
    assert pres.generators == ("Y", "T1", "T2", "T3^(+-1)")
    assert "(Y - 3) * (T1, T2)" in pres.describe()


def test_presentation_relations_vanish_pointwise():
    ps = validate_parameters(4, 5, 2)
    ring = invariant_ring(ps)
    pres = emit_center_presentation(ring)
    for a in range(5):
        pt = make_point(ps, a)
        for name, val in pres.relation_values(pt):
            assert val.is_zero(), name


def test_custom_t_count():
    ps = validate_parameters(2, 3, 2)
    ring = invariant_ring(ps)
    pres = emit_center_presentation(ring, t_count=1)
    assert pres.generators == ("Y", "T1^(+-1)")
    # with t_count = 1 there are no (Y - n) T_k relations at all
    pt = make_point(ps, 1)
    assert pres.relation_values(pt) == [("m(Y)", pres.min_poly(pt.trace) * 1)]


def test_relation_failure_on_broken_point():
    # tamper with a point: claim zeta-exponent 0 but use the a=1 trace
    ps = validate_parameters(2, 3, 2)
    ring = invariant_ring(ps)
    good = make_point(ps, 1)
    from dataclasses import replace

    bad = replace(good, zeta_exponent=0)
    with pytest.raises(AssertionFailure):
        check_relations(bad, ps, ring)
