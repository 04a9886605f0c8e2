"""Block vectors, case analysis, and the generator-reconstruction
pipeline.  Numeric expectations were frozen from hand computations:
P1 gamma = (2, -1) with unit -1, P2 witness delta = (0, 14, 14) with
unit 2, P5 unit -216 = -1080/5, and the reconstruction scalars
(7/8, -1/8) for GL_2(F_8) ellipics and (416/729, -500/729) for the
degree-4 semisimple classes of GL_4(F_3)."""

from fractions import Fraction

import pytest

from cuspcenter.centermap import (
    BUCKETS,
    DEGREE_N,
    NON_PRIMARY,
    PRIMARY_SMALL_DIAG,
    PRIMARY_SMALL_NONDIAG,
    REALIZED_WITNESS,
    BlockVector,
    block_slots,
    delta_class,
    express_in_gamma,
    gamma_power_basis,
    gamma_vector,
    lemma_signs_check,
    minimality_certificate,
    one_vector,
    s_membership,
    theta_orbit_vector,
)
from cuspcenter.cyclotomic import CyclotomicNumber, zeta
from cuspcenter.errors import AssertionFailure, IntegralityFailure, NoSolution
from cuspcenter.invariants import invariant_ring
from cuspcenter.params import validate_parameters
from cuspcenter.polynomials import Poly

# frozen bucket counts, in BUCKETS order, and the idempotent units
EXPECTED_BUCKETS = {
    "P1": ((1, 0, 0, 1, 1), Fraction(-1)),
    "P2": ((1, 1, 1, 1, 2), Fraction(2)),
    "P3": ((1, 21, 6, 7, 28), Fraction(-1)),
    "P4": ((1, 3, 2, 3, 6), Fraction(-1)),
    "P5": ((1, 44, 10, 5, 18), Fraction(-216)),
    "U4": ((1, 3, 2, 3, 6), Fraction(-1)),
}

EXPECTED_RECONS = {"P1": 1, "P2": 2, "P3": 28, "P4": 6, "P5": 16, "U4": 6}


@pytest.mark.parametrize("label", sorted(EXPECTED_BUCKETS))
def test_bucket_counts_and_idempotent_unit(label, endo_results):
    res = endo_results[label]
    counts, unit = EXPECTED_BUCKETS[label]
    assert tuple(res.case_report.bucket_counts[b] for b in BUCKETS) == counts
    assert res.idempotent_unit == unit
    assert len(res.reconstructions) == EXPECTED_RECONS[label]


def test_scaled_idempotent_shape(endo_results):
    for label, res in endo_results.items():
        ps = res.params
        vals = res.scaled_idempotent.rational_entries()
        assert vals[0] == ps.ell_power
        assert all(v == 0 for v in vals[1:])


def test_p1_gamma_and_certificates(endo_results):
    res = endo_results["P1"]
    assert res.gamma.rational_entries() == (Fraction(2), Fraction(-1))
    certs = res.certificates
    assert certs["x+1:(1,1)"].coeffs == (Fraction(1),)
    assert certs["x+1:(2)"].coeffs == (Fraction(-2), Fraction(1))
    assert certs["x^2+x+1:(1)"].coeffs == (Fraction(1), Fraction(-1))


def test_p1_deltas_frozen(endo_results):
    res = endo_results["P1"]
    assert res.deltas["x+1:(1,1)"].rational_entries() == (Fraction(1), Fraction(1))
    assert res.deltas["x+1:(2)"].rational_entries() == (Fraction(0), Fraction(-3))
    assert res.deltas["x^2+x+1:(1)"].rational_entries() == (Fraction(-1), Fraction(2))


def test_p2_witness_delta_and_certificate(endo_results):
    res = endo_results["P2"]
    wit = res.case_report.witness_label
    assert wit == "x+1:(3)"
    assert res.deltas[wit].rational_entries() == (
        Fraction(0),
        Fraction(14),
        Fraction(14),
    )
    h = res.certificates[wit]
    assert h.coeffs == (Fraction(12), Fraction(-1), Fraction(-1))  # 12 - Y - Y^2


def test_g_reports(endo_results):
    res = endo_results["P1"]
    assert res.g_report["g_at_n"] == 3  # g = Y + 1 at n = 2
    res = endo_results["P2"]
    assert res.g_report["g_at_n"] == 14  # g = Y^2 + Y + 2 at n = 3
    for res in endo_results.values():
        assert res.g_report["valuation"] == res.params.r


def test_reconstruction_scalars_p3(endo_results):
    res = endo_results["P3"]
    # every elliptic class of GL_2(F_8) has |C| = 56 and the same chain
    for rec in res.reconstructions:
        assert rec["unit"] == Fraction(-8)
        assert rec["steinberg_slot"] == Fraction(7, 8)
        assert rec["correction"] == Fraction(-1, 8)
        assert rec["theta_exponent"] % 9 != 0  # a genuine l-singular class


def test_reconstruction_scalars_p5(endo_results):
    res = endo_results["P5"]
    semisimple = [
        rec
        for rec in res.reconstructions
        if rec["steinberg_slot"] == Fraction(416, 729)
    ]
    assert semisimple  # the regular semisimple degree-4 chain appears
    for rec in semisimple:
        assert rec["unit"] == Fraction(-729)
        assert rec["correction"] == Fraction(-500, 729)


def test_lemma_signs_frozen_spots(endo_results):
    rows = {(row["v"], row["d"]): row for row in endo_results["P1"].signs}
    assert rows[(2, 1)]["lhs"] == Fraction(1, 2)
    assert rows[(2, 1)]["rhs"] == 2
    rows = {(row["v"], row["d"]): row for row in endo_results["P2"].signs}
    assert rows[(3, 1)]["lhs"] == 1
    assert rows[(3, 1)]["rhs"] == 8
    assert rows[(1, 3)]["lhs"] == rows[(1, 3)]["rhs"] == 1


def test_lemma_signs_all_divisor_pairs():
    for q, ell, n in ((2, 3, 2), (2, 7, 3), (8, 3, 2), (4, 5, 2), (3, 5, 4)):
        ps = validate_parameters(q, ell, n)
        rows = lemma_signs_check(ps)
        assert len(rows) == sum(1 for v in range(1, n + 1) if n % v == 0)
        for row in rows:
            diff = row["lhs"] - row["rhs"]
            if diff:
                from cuspcenter.arith import ord_frac

                assert ord_frac(diff, ell) >= ps.r


def test_s_membership_accepts():
    ps = validate_parameters(2, 7, 3)
    reps = block_slots(ps)
    assert s_membership(one_vector(ps))
    # the scaled idempotent (l^r, 0, 0): slot difference has valuation r
    idem = BlockVector(7, 1, reps, [7, 0, 0])
    assert s_membership(idem)
    # witness shape (0, 14, 14)
    assert s_membership(BlockVector(7, 1, reps, [0, 14, 14]))


def test_s_membership_rejects():
    ps = validate_parameters(2, 7, 3)
    reps = block_slots(ps)
    # slot difference not divisible by l^r
    assert not s_membership(BlockVector(7, 1, reps, [1, 2, 2]))
    # unequal cuspidal slots
    assert not s_membership(BlockVector(7, 1, reps, [0, 7, 14]))
    # denominators prime to l are units, so 7/2 entries stay inside S
    assert s_membership(BlockVector(7, 1, reps, [0, Fraction(7, 2), Fraction(7, 2)]))
    third = Fraction(1, 7)
    assert not s_membership(BlockVector(7, 1, reps, [third, third, third]))
    # irrational cuspidal slot
    irr = BlockVector(7, 1, reps, [3, zeta(7, 1), zeta(7, 1)])
    assert not s_membership(irr)


def test_s_flags_by_bucket(endo_results):
    # asserted True off the degree-n bucket by case_analysis; verify the
    # recorded flags are consistent with an independent recomputation
    for res in endo_results.values():
        report = res.case_report
        for label, bucket in report.bucket_of.items():
            if bucket in (NON_PRIMARY, PRIMARY_SMALL_DIAG, PRIMARY_SMALL_NONDIAG):
                assert report.s_flags[label]
            assert report.s_flags[label] == s_membership(res.deltas[label])


def test_degree_n_s_flags_observed(endo_results):
    # not asserted by the engine, but these two cases happen to land
    # entirely inside S; record that observation so a change is loud
    res = endo_results["P1"]
    assert res.case_report.s_flags["x^2+x+1:(1)"]
    res5 = endo_results["P5"]
    flags = [
        res5.case_report.s_flags[label]
        for label, bucket in res5.case_report.bucket_of.items()
        if bucket == DEGREE_N
    ]
    assert len(flags) == 18 and all(flags)


def test_gamma_is_theta_orbit_of_one():
    for q, ell, n in ((2, 3, 2), (8, 3, 2), (3, 5, 4)):
        ps = validate_parameters(q, ell, n)
        assert theta_orbit_vector(ps, 1) == gamma_vector(ps)


def test_theta_orbit_vector_q_orbit_invariance():
    ps = validate_parameters(8, 3, 2)
    # j and j*q give the same vector (the sum is over the q-power orbit)
    for j in (1, 2, 4):
        assert theta_orbit_vector(ps, j) == theta_orbit_vector(ps, j * 8 % 9)


def test_minimality_negative():
    ps = validate_parameters(2, 3, 2)
    ring = invariant_ring(ps)
    fake = BlockVector(3, 1, block_slots(ps), [2, 2])  # repeated slot value
    with pytest.raises(AssertionFailure):
        minimality_certificate(ring, fake)


def test_express_in_gamma_failure_modes():
    ps = validate_parameters(2, 3, 2)
    gamma = gamma_vector(ps)
    pows = gamma_power_basis(gamma, 2)
    reps = block_slots(ps)
    # a vector with an irrational slot cannot be a polynomial in gamma
    outside = BlockVector(3, 1, reps, [0, zeta(3, 1)])
    with pytest.raises(NoSolution):
        express_in_gamma(outside, pows, ps)
    # rationally consistent but with non-l-integral coordinates
    fractional = BlockVector(3, 1, reps, [Fraction(1, 3), Fraction(1, 3)])
    with pytest.raises(IntegralityFailure):
        express_in_gamma(fractional, pows, ps)


def test_certificates_reproduce_deltas(endo_results):
    for res in endo_results.values():
        gamma = res.gamma
        pows = gamma_power_basis(gamma, res.ring.dimension)
        for label, h in res.certificates.items():
            vec = res.deltas[label]
            for slot_idx in range(len(vec.entries)):
                acc = CyclotomicNumber.zero(res.params.ell, res.params.r)
                for coeff, pw in zip(h.coeffs, pows):
                    acc = acc + pw.entries[slot_idx] * coeff
                assert (acc - vec.entries[slot_idx]).is_zero()
            assert h.is_ell_integral(res.params.ell)
            assert h.degree < res.ring.dimension


def test_delta_class_standalone_matches_pipeline(endo_results):
    res = endo_results["P1"]
    ps = res.params
    for ct in res.classes:
        assert delta_class(ct, ps) == res.deltas[ct.label()]


def test_reduced_twin_agrees(endo_results):
    p4, u4 = endo_results["P4"], endo_results["U4"]
    assert u4.params == p4.params
    assert u4.params_input != p4.params_input
    assert u4.ring.m == p4.ring.m
    assert u4.gamma == p4.gamma
    assert {k: v.coeffs for k, v in u4.certificates.items()} == {
        k: v.coeffs for k, v in p4.certificates.items()
    }
    assert u4.idempotent_unit == p4.idempotent_unit


def test_check_log_is_complete(endo_results):
    for res in endo_results.values():
        joined = " ".join(res.checks)
        for needle in (
            "invariant-ring",
            "uniformizer",
            "pullback",
            "classes:",
            "delta:",
            "case analysis",
            "sign congruences",
            "scaled idempotent",
            "gamma:",
            "gamma reconstruction",
            "closure:",
            "g = m/(Y - n)",
        ):
            assert needle in joined
