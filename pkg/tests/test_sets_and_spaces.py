from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import rep_sets, spaces
from vecmeasure.measure_space import (
    AtomicMeasureSpace,
    counting,
    finite_measure_sets_are_finite,
    geometric_space,
    in_sigma_f,
    is_mu_null,
    measure,
    validate_locally_determined,
)
from vecmeasure.scalars import INF, GeometricSequence, constant, geometric
from vecmeasure.sets import EMPTY, NATURALS, RepresentableSet

probe = st.integers(0, 20)


class TestSetAlgebra:
    @given(rep_sets(), rep_sets(), probe)
    def test_operations_are_pointwise(self, A, B, t):
        assert (t in A | B) == (t in A or t in B)
        assert (t in A & B) == (t in A and t in B)
        assert (t in A - B) == (t in A and t not in B)
        assert (t in A.complement()) == (t not in A)

    @given(rep_sets(), rep_sets(), rep_sets())
    def test_distributive_and_de_morgan(self, A, B, C):
        assert A & (B | C) == (A & B) | (A & C)
        assert (A | B).complement() == A.complement() & B.complement()

    @given(rep_sets())
    def test_complement_is_involutive(self, A):
        assert A.complement().complement() == A
        assert A | A.complement() == NATURALS
        assert (A & A.complement()).is_empty

    @given(rep_sets(), rep_sets())
    def test_subset_order(self, A, B):
        assert (A & B) <= A
        assert A <= (A | B)

    def test_constructors(self):
        assert 5 in RepresentableSet.from_index(3) and 2 not in RepresentableSet.from_index(3)
        assert RepresentableSet.interval(2, 5).elements() == [2, 3, 4]
        assert EMPTY.is_empty and not NATURALS.is_finite

    def test_invalid_members_rejected(self):
        with pytest.raises(ValueError):
            RepresentableSet.finite([-1])
        with pytest.raises(ValueError):
            RepresentableSet.finite([True])

    def test_cofinite_cannot_be_listed(self):
        with pytest.raises(ValueError):
            NATURALS.elements()


class TestMeasureSpace:
    def test_counting_measure(self):
        assert measure(counting(), RepresentableSet.finite([0, 1, 2])) == 3
        assert measure(counting(), NATURALS) is INF
        assert measure(counting(), EMPTY) == 0

    def test_sigma_f_membership(self):
        assert in_sigma_f(counting(), RepresentableSet.interval(0, 10))
        assert not in_sigma_f(counting(), NATURALS)
        assert in_sigma_f(geometric_space(1, Fraction(1, 2)), NATURALS)
        assert measure(geometric_space(1, Fraction(1, 2)), NATURALS) == 2

    def test_infinite_atom_breaks_local_determination(self):
        space = AtomicMeasureSpace(constant(1), frozenset({3}), allow_infinite_atoms=True)
        assert not validate_locally_determined(space)
        assert measure(space, RepresentableSet.finite([3])) is INF
        assert not is_mu_null(space, RepresentableSet.finite([3]))

    def test_infinite_atoms_need_explicit_opt_in(self):
        with pytest.raises(ValueError):
            AtomicMeasureSpace(constant(1), frozenset({3}))

    def test_negative_weights_rejected(self):
        with pytest.raises(ValueError):
            AtomicMeasureSpace(GeometricSequence({0: -1}, 1))

    def test_validity(self):
        assert validate_locally_determined(counting())
        assert validate_locally_determined(AtomicMeasureSpace(GeometricSequence()))

    def test_null_sets(self):
        space = AtomicMeasureSpace(constant(1) - GeometricSequence({5: 1}, 6))
        assert is_mu_null(space, RepresentableSet.finite([5]))
        assert not is_mu_null(counting(), RepresentableSet.finite([0]))
        assert is_mu_null(counting(), EMPTY)

    def test_finite_measure_sets_are_finite(self):
        assert finite_measure_sets_are_finite(counting())
        assert not finite_measure_sets_are_finite(geometric_space(1, Fraction(1, 2)))
        assert finite_measure_sets_are_finite(geometric_space(1, 2))

    @given(spaces, rep_sets(), rep_sets())
    def test_delta_ring_closure(self, space, A, B):
        if in_sigma_f(space, A) and in_sigma_f(space, B):
            for C in (A | B, A & B, A - B):
                assert in_sigma_f(space, C)

    @given(spaces, rep_sets(), rep_sets())
    def test_measure_is_additive_and_monotone(self, space, A, B):
        total = measure(space, A | B)
        parts = measure(space, A - B) + measure(space, B)
        assert total == parts
        assert measure(space, A & B) <= measure(space, A)

    @given(spaces, rep_sets())
    def test_semifinite_in_executable_form(self, space, A):
        # finite-measure subsets A & [0, n) exhaust mu(A) from below
        total = measure(space, A)
        inner = [measure(space, A.truncate(n)) for n in (0, 8, 16, 32, 64)]
        assert all(in_sigma_f(space, A.truncate(n)) for n in (8, 64))
        assert all(x <= total for x in inner)
        if total is INF:
            assert measure(space, A.truncate(2048)) > inner[0]
        else:
            assert measure(space, A.truncate(2048)) + measure(space, A - RepresentableSet.interval(0, 2048)) == total

    @given(spaces, rep_sets())
    def test_null_iff_zero_measure(self, space, A):
        assert is_mu_null(space, A) == (measure(space, A) == 0)


def test_geometric_space_helper():
    assert geometric_space(2, Fraction(1, 3)).weights == geometric(2, Fraction(1, 3))
