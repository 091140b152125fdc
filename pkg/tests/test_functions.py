from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import rank_functions, rationals, rep_sets, sequences, targets
from vecmeasure.banach import FiniteDimSpace
from vecmeasure.errors import MixedSpaceError
from vecmeasure.functions import (
    DiagonalFunction,
    EquivalenceTag,
    RankDecomposedFunction,
    disagreement_set,
    evaluate,
    multiply,
    one_term,
    truncate,
    weakly_equal_ae,
)
from vecmeasure.measure_space import AtomicMeasureSpace, counting
from vecmeasure.scalars import ONE, GeometricSequence, constant, delta, geometric, indicator
from vecmeasure.sets import RepresentableSet

X2 = FiniteDimSpace(2, "inf")
HALF = Fraction(1, 2)
probe = st.integers(0, 25)


def test_evaluate_single_term():
    assert evaluate(one_term(constant(1), X2.vector([1, 1])), 7) == X2.vector([1, 1])


def test_evaluate_two_terms():
    F = RankDecomposedFunction(X2, ((delta(0, 1), X2.vector([1, 0])), (delta(1, 2), X2.vector([0, 1]))))
    assert F(1) == X2.vector([0, 2])


def test_empty_term_list_is_zero():
    assert RankDecomposedFunction(X2, ())(3) == X2.zero()


def test_mismatched_ratios_rejected():
    with pytest.raises(ValueError):
        RankDecomposedFunction(X2, ((geometric(1, HALF), X2.vector([1, 0])), (constant(1), X2.vector([0, 1]))))


def test_vectors_must_live_in_target():
    with pytest.raises(MixedSpaceError):
        RankDecomposedFunction(X2, ((constant(1), FiniteDimSpace(2, 1).vector([1, 0])),))


def test_multiply_identity_and_indicator():
    F = one_term(geometric(1, HALF), X2.vector([3, 4]))
    assert multiply(ONE, F)(5) == F(5)
    cut = multiply(indicator(RepresentableSet.finite([1, 2])), F)
    assert cut.tail_vector.is_zero
    assert cut(0) == X2.zero() and cut(2) == F(2)


def test_multiply_geometric_into_constant():
    F = one_term(constant(1), X2.vector([1, 1]))
    gF = multiply(geometric(1, HALF), F)
    assert gF.terms[0][0] == geometric(1, HALF)
    assert gF.tail_ratio == HALF


def test_diagonal_function():
    F = DiagonalFunction(geometric(2, HALF))
    assert F(1).entries == delta(1, 1)
    assert F.pair(delta(1, 3)) == delta(1, 3)
    assert F.norms() == geometric(2, HALF)


@given(rank_functions(), probe)
def test_tail_normal_form(F, t):
    if t >= F.tail_start:
        assert F(t) == F.tail_vector.scale(F.tail_ratio ** t)


@given(rank_functions(), probe)
def test_coordinates_and_pairing_are_pointwise(F, t):
    x = F.space.dual().basis(0)
    assert F.coordinate(0)(t) == F(t)[0]
    assert F.pair(x)(t) == F(t)[0]


@given(rank_functions(), sequences(), probe)
def test_multiply_is_pointwise(F, g, t):
    assert multiply(g, F)(t) == F(t).scale(g(t))


@given(targets.flatmap(lambda X: st.tuples(rank_functions(target=X), sequences(ratio=st.just(HALF)),
                                             sequences(ratio=st.just(HALF)), rationals)), probe)
def test_multiply_is_bilinear(data, t):
    F, g1, g2, a = data
    combined = multiply(g1.scale(a) + g2, F)(t)
    assert combined == multiply(g1, F)(t).scale(a) + multiply(g2, F)(t)


@given(sequences(), sequences(), probe)
def test_diagonal_multiply_is_pointwise(s, g, t):
    assert multiply(g, DiagonalFunction(s))(t).entries == delta(t, g(t) * s(t))


@given(rank_functions(), rep_sets(), probe)
def test_truncate(F, A, t):
    assert truncate(F, A)(t) == (F(t) if t in A else F.space.zero())


@given(rank_functions(), sequences(), probe)
def test_truncations_converge_pointwise(F, g, t):
    # g chi_[0,n) F agrees with gF at t as soon as n > t
    for n in (t + 1, t + 5):
        gn = g * indicator(RepresentableSet.interval(0, n))
        assert multiply(gn, F)(t) == multiply(g, F)(t)


def test_rank_one_detection():
    assert one_term(constant(1), X2.vector([1, 2])).is_rank_one
    parallel = RankDecomposedFunction(X2, ((delta(0, 1), X2.vector([1, 2])), (delta(1, 1), X2.vector([-2, -4]))))
    assert parallel.is_rank_one
    crossed = RankDecomposedFunction(X2, ((delta(0, 1), X2.vector([1, 0])), (delta(1, 1), X2.vector([0, 1]))))
    assert not crossed.is_rank_one


class TestAlmostEverywhereEquality:
    def test_equal_functions(self):
        F = one_term(constant(1), X2.vector([1, 0]))
        assert weakly_equal_ae(F, F, counting())

    def test_differ_on_null_atom(self):
        space = AtomicMeasureSpace(constant(1) - delta(5, 1))
        F = one_term(constant(1), X2.vector([1, 0]))
        G = one_term(constant(1) + delta(5, 3), X2.vector([1, 0]))
        assert weakly_equal_ae(F, G, space)
        assert not weakly_equal_ae(F, G, counting())

    def test_zero_against_constant(self):
        F = RankDecomposedFunction(X2, ())
        G = one_term(constant(1), X2.vector([1, 0]))
        assert not weakly_equal_ae(F, G, counting())

    def test_differing_tails_on_null_ray(self):
        space = AtomicMeasureSpace(GeometricSequence({0: 1, 1: 1}, 2))
        F = one_term(constant(1), X2.vector([1, 0]))
        G = one_term(delta(0, 1) + delta(1, 1), X2.vector([1, 0]))
        assert weakly_equal_ae(F, G, space)
        assert disagreement_set(F, G) == RepresentableSet.from_index(2)

    def test_equivalence_tag(self):
        space = AtomicMeasureSpace(constant(1) - delta(5, 1))
        F = one_term(constant(1), X2.vector([1, 0]))
        G = one_term(constant(1) + delta(5, 3), X2.vector([1, 0]))
        assert EquivalenceTag(RepresentableSet.finite([5])).admits(F, G, space)
        assert not EquivalenceTag(RepresentableSet.finite([4])).admits(F, G, space)

    def test_different_targets_rejected(self):
        with pytest.raises(MixedSpaceError):
            disagreement_set(one_term(ONE, X2.vector([1, 0])), DiagonalFunction(ONE))

    @given(rank_functions(), sequences(), st.lists(st.integers(0, 10), max_size=3))
    def test_perturbation_on_null_atoms(self, F, g, zeros):
        space = AtomicMeasureSpace(constant(1).restrict(RepresentableSet.cofinite_of(zeros)))
        bump = GeometricSequence({t: 7 for t in zeros}, max(zeros, default=-1) + 1)
        assert weakly_equal_ae(multiply(g, F), multiply(g + bump, F), space)
