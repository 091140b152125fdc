from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import diagonal_functions, nonneg_rationals, rank_functions, rationals, sequences, spaces
from vecmeasure import density as dm
from vecmeasure import l1
from vecmeasure.banach import FiniteDimSpace
from vecmeasure.errors import NotLocallyPettisError, NotNuIntegrableError
from vecmeasure.functions import DiagonalFunction, RankDecomposedFunction, multiply, one_term
from vecmeasure.integration import dunford_norm, norm_integral, pettis_decide
from vecmeasure.measure_space import AtomicMeasureSpace, counting, geometric_space
from vecmeasure.oracles import sample_dual_ball
from vecmeasure.scalars import (
    INF,
    ONE,
    GeometricSequence,
    constant,
    delta,
    geometric,
    indicator,
    signed_sum,
)
from vecmeasure.sets import NATURALS, RepresentableSet

HALF = Fraction(1, 2)
PAIR = RepresentableSet.finite([0, 1])
G = GeometricSequence({0: 2, 1: HALF}, 2)
functions = st.one_of(rank_functions(), diagonal_functions)


def two_atoms() -> dm.DensityMeasure:
    X = FiniteDimSpace(2, "inf")
    F = RankDecomposedFunction(X, ((delta(0, 1), X.vector([1, 0])), (delta(1, 2), X.vector([0, 1]))))
    return dm.DensityMeasure(F, AtomicMeasureSpace(indicator(PAIR)))


def geometric_line() -> dm.DensityMeasure:
    X = FiniteDimSpace(2, 2)
    return dm.DensityMeasure(one_term(geometric(1, HALF), X.vector([3, 4])), counting())


def build(F, space):
    try:
        return dm.DensityMeasure(F, space)
    except NotLocallyPettisError:
        assume(False)


class TestWorkedValues:
    def test_nu_norm(self):
        assert l1.nu_norm(G, two_atoms()) == 2
        assert l1.nu_norm(GeometricSequence(), two_atoms()) == 0
        assert l1.nu_norm(ONE, geometric_line()) == 10

    def test_isometry(self):
        check = l1.mf_isometry_check(G, two_atoms())
        assert (check.lhs, check.rhs, check.equal) == (2, 2, True)
        zero = l1.mf_isometry_check(GeometricSequence(), two_atoms())
        assert zero.lhs == zero.rhs == 0

    def test_indicator_isometry_equals_semivariation(self):
        nu = geometric_line()
        B = RepresentableSet.finite([1, 4, 5])
        check = l1.mf_isometry_check(indicator(B), nu)
        assert check.equal and check.lhs == dm.semivariation(nu, B) == dunford_norm(nu.F, nu.space, B)

    def test_integral(self):
        nu = two_atoms()
        assert l1.integrate(G, nu) == nu.F.space.vector([2, 1])
        B = RepresentableSet.finite([1])
        assert l1.integrate(indicator(B), nu) == nu(B)

    def test_rank_one_integral(self):
        nu = geometric_line()
        g = GeometricSequence({0: -1}, 1, 3, Fraction(3, 2))
        expected = nu.F.space.vector([3, 4]).scale(signed_sum(g * geometric(1, HALF)))
        assert l1.integrate(g, nu) == expected

    def test_variation_norm(self):
        nu = two_atoms()
        assert l1.variation_norm(G, nu) == 3
        assert l1.l1_variation_check(G, nu).equal
        assert l1.variation_norm(GeometricSequence(), nu) == 0

    def test_rank_one_spaces_coincide(self):
        nu = geometric_line()
        for g in (ONE, geometric(1, 2), geometric(1, 3), delta(4, 9)):
            v = l1.classify(g, nu)
            assert v.in_L1w == v.in_L1 == v.in_L1_of_variation

    def test_c0_separates_weak_and_strong(self):
        nu = dm.DensityMeasure(DiagonalFunction(constant(1)), counting())
        v = l1.classify(ONE, nu)
        assert v.in_L1w and not v.in_L1 and not v.in_L1_of_variation
        assert v.integral is None
        with pytest.raises(NotNuIntegrableError):
            l1.integrate(ONE, nu)

    def test_simple_function_defect(self):
        nu = geometric_line()
        assert l1.simple_function_approximation(ONE, nu, 4).defect == Fraction(5, 8)
        assert l1.defect_certificate(ONE, nu)(4) == Fraction(5, 8)
        finite = GeometricSequence({0: 1, 3: 2}, 4)
        assert l1.simple_function_approximation(finite, nu, 6).defect == 0

    def test_simple_function_needs_integrability(self):
        nu = dm.DensityMeasure(DiagonalFunction(constant(1)), counting())
        with pytest.raises(NotNuIntegrableError):
            l1.simple_function_approximation(ONE, nu, 3)
        with pytest.raises(NotNuIntegrableError):
            l1.defect_certificate(ONE, nu)

    def test_certificate_before_its_start(self):
        cert = l1.defect_certificate(ONE, geometric_line())
        with pytest.raises(ValueError):
            cert(cert.start - 1) if cert.start > 0 else cert(-1)

    def test_normalization_zeroes_null_atoms(self):
        nu = two_atoms()
        g = G + delta(5, 100)
        assert l1.normalize_multiplier(g, nu) == G
        assert l1.nu_norm(g, nu) == l1.nu_norm(G, nu)


@given(functions, spaces, sequences())
def test_isometry(F, space, g):
    nu = build(F, space)
    check = l1.mf_isometry_check(g, nu)
    assert check.equal
    verdict = pettis_decide(multiply(g, F), space)
    assert l1.in_L1w(g, nu) == verdict.dunford
    assert l1.in_L1(g, nu) == verdict.pettis


@given(functions, spaces, sequences())
def test_variation_isometry(F, space, g):
    nu = build(F, space)
    assert nu.local.locally_bochner
    check = l1.l1_variation_check(g, nu)
    assert check.equal
    assert (check.lhs is not INF) == pettis_decide(multiply(g, F), space).bochner


@given(functions, spaces, sequences())
def test_space_chain(F, space, g):
    nu = build(F, space)
    v = l1.classify(g, nu)
    assert not v.in_L1_of_variation or v.in_L1
    assert not v.in_L1 or v.in_L1w
    assert v.variation_norm is INF or v.nu_norm <= v.variation_norm


@given(rank_functions(ratio=st.just(HALF)), spaces, sequences(ratio=st.just(HALF)),
       sequences(ratio=st.just(HALF)), rationals)
def test_integral_is_linear(F, space, g1, g2, a):
    nu = build(F, space)
    assume(l1.in_L1(g1, nu) and l1.in_L1(g2, nu))
    combined = l1.integrate(g1.scale(a) + g2, nu)
    assert combined == l1.integrate(g1, nu).scale(a) + l1.integrate(g2, nu)


@given(rank_functions(), spaces, sequences(), sequences(), nonneg_rationals)
def test_nu_norm_is_a_seminorm(F, space, g1, g2, a):
    nu = build(F, space)
    assert l1.nu_norm(g1.scale(a), nu) == a * l1.nu_norm(g1, nu)
    try:
        total = g1 + g2
    except ValueError:
        assume(False)
    lhs, right = l1.nu_norm(total, nu), [l1.nu_norm(g1, nu), l1.nu_norm(g2, nu)]
    assert INF in right or lhs <= right[0] + right[1]


@given(rank_functions(), spaces, sequences())
def test_integral_identity_through_duals(F, space, g):
    nu = build(F, space)
    assume(l1.in_L1(g, nu))
    xstars = sample_dual_ball(F.space, random.Random(2), 10)
    for A in (NATURALS, RepresentableSet.finite([0, 3, 5]), RepresentableSet.from_index(4)):
        assert l1.duality_defect(g, nu, A, xstars) == []


@given(functions, spaces, sequences())
def test_defect_decreases_to_zero(F, space, g):
    nu = build(F, space)
    assume(l1.in_L1(g, nu))
    cert = l1.defect_certificate(g, nu)
    defects = [l1.simple_function_approximation(g, nu, n).defect for n in range(cert.start + 4)]
    assert all(b <= a for a, b in zip(defects, defects[1:]))
    assert all(defects[n] == cert(n) for n in range(cert.start, cert.start + 4))
    assert cert.coeff == 0 or cert.ratio < 1


@given(functions, spaces, sequences(), st.lists(st.integers(0, 12), max_size=4))
def test_well_defined_on_classes(F, space, g, bumps):
    nu = build(F, space)
    null = dm.null_set(nu)
    bump = GeometricSequence({t: 5 for t in bumps if t in null}, max(bumps, default=-1) + 1)
    h = g + bump
    assert l1.nu_norm(h, nu) == l1.nu_norm(g, nu)
    assert l1.in_L1(h, nu) == l1.in_L1(g, nu)
    assert l1.weighted_total_variation(h, nu) == l1.weighted_total_variation(g, nu)
    if l1.in_L1(g, nu):
        assert dm.value_norm(l1.integrate(g, nu)) == dm.value_norm(l1.integrate(h, nu))


def test_measure_side_and_function_side_on_geometric_space():
    nu = dm.DensityMeasure(one_term(geometric(1, 2), FiniteDimSpace(2, 1).vector([1, -1])), geometric_space(1, Fraction(1, 3)))
    for g in (ONE, geometric(1, Fraction(3, 2)), geometric(1, HALF)):
        assert l1.nu_norm(g, nu) == dunford_norm(multiply(g, nu.F), nu.space)
        assert l1.weighted_total_variation(g, nu) == norm_integral(multiply(g, nu.F), nu.space)
