"""The vector measure nu_F(B) = P-int_B F dmu on the delta-ring Sigma^f.

Quantities are computed from the measure side: atoms nu_F({t}) come from
Pettis integrals over singletons, and past F's tail start every atom is a
multiple ``a(t) * w`` of the tail vector, with ``a(t) = mu_t r**t``.  The
semivariation is then

    ||nu_F||(A) = sup_{x*} sum_{t in A} |<nu_F({t}), x*>|

with the tail atoms collapsed into a single term, while the variation is
``int_A ||F|| dmu``.  ``variation_bruteforce`` recomputes the variation from
its definition as a supremum over partitions.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .banach import C0DiagonalVector, FiniteDimVector, dual_ball_argmax, norm
from .errors import (
    InconsistencyError,
    NotInSigmaFError,
    NotLocallyBochnerError,
    NotLocallyDeterminedError,
    NotLocallyPettisError,
    TooLargeError,
)
from .functions import DiagonalFunction, VectorFunction
from .integration import LocalIntegrability, locally_integrable, pettis_integral, tail_weights
from .measure_space import AtomicMeasureSpace, in_sigma_f, validate_locally_determined
from .scalars import INF, ONE, GeometricSequence, delta, seq_argmax, seq_sum, seq_sup, signed_sum
from .sets import NATURALS, RepresentableSet

BRUTEFORCE_LIMIT = 12


@dataclass(frozen=True)
class DensityMeasure:
    F: VectorFunction
    space: AtomicMeasureSpace
    local: LocalIntegrability = field(init=False, repr=False)
    tail_start: int = field(init=False, repr=False)
    atom_weights: GeometricSequence = field(init=False, repr=False)
    tail_vector: FiniteDimVector | None = field(init=False, repr=False)
    head_atoms: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not validate_locally_determined(self.space):
            raise NotLocallyDeterminedError("nu_F needs a locally determined measure")
        local = locally_integrable(self.F, self.space)
        if not local.locally_pettis:
            raise NotLocallyPettisError("F is not locally Pettis integrable", local)
        object.__setattr__(self, "local", local)
        if self.is_diagonal:
            # nu_F({t}) = mu_t s(t) e_t
            object.__setattr__(self, "tail_start", 0)
            object.__setattr__(self, "atom_weights", self.space.weights * self.F.s)
            object.__setattr__(self, "tail_vector", None)
            object.__setattr__(self, "head_atoms", ())
        else:
            object.__setattr__(self, "tail_start", self.F.tail_start)
            object.__setattr__(self, "atom_weights", tail_weights(self.F, self.space))
            object.__setattr__(self, "tail_vector", self.F.tail_vector)
            singletons = (evaluate_measure(self, RepresentableSet.finite([t])) for t in range(self.tail_start))
            object.__setattr__(self, "head_atoms", tuple(singletons))

    @property
    def is_diagonal(self) -> bool:
        return isinstance(self.F, DiagonalFunction)

    def __call__(self, B: RepresentableSet):
        return evaluate_measure(self, B)


def evaluate_measure(nu: DensityMeasure, B: RepresentableSet):
    if not in_sigma_f(nu.space, B):
        raise NotInSigmaFError(f"{B!r} has infinite measure")
    return pettis_integral(nu.F, nu.space, B)


def atom(nu: DensityMeasure, t: int):
    """nu_F({t}); past the tail start this is mu_t r**t w."""
    if nu.is_diagonal:
        return C0DiagonalVector(delta(t, nu.atom_weights(t)))
    if t < nu.tail_start:
        return nu.head_atoms[t]
    return nu.tail_vector.scale(nu.atom_weights(t))


def value_norm(x):
    """Norm of a value of nu_F, in either target family."""
    return x.sup_norm() if isinstance(x, C0DiagonalVector) else norm(x)


def _head(nu: DensityMeasure, A: RepresentableSet) -> list[int]:
    return list(A.members_below(nu.tail_start))


def atom_terms(nu: DensityMeasure, g: GeometricSequence, A: RepresentableSet) -> list[tuple]:
    """Kernel terms (|g(t)|, nu_F({t})) over A, tail atoms collapsed onto w."""
    terms = [(abs(g(t)), atom(nu, t)) for t in _head(nu, A)]
    if not nu.tail_vector.is_zero:
        terms.append((seq_sum(abs(g) * nu.atom_weights, A), nu.tail_vector))
    return terms


def weighted_semivariation(nu: DensityMeasure, g: GeometricSequence, A: RepresentableSet = NATURALS):
    """sup_{x* in B_X*} int_A |g| d|<nu_F, x*>|."""
    if nu.is_diagonal:
        return seq_sup(abs(g * nu.atom_weights), A)
    return dual_ball_argmax(atom_terms(nu, g, A)).value


def semivariation(nu: DensityMeasure, A: RepresentableSet = NATURALS):
    return weighted_semivariation(nu, ONE, A)


def semivariation_witness(nu: DensityMeasure, A: RepresentableSet = NATURALS):
    """DualMax for finite-dimensional targets; the norming index t (x* = +-e_t) for c0."""
    if nu.is_diagonal:
        return seq_argmax(abs(nu.atom_weights), A)
    return dual_ball_argmax(atom_terms(nu, ONE, A))


def weighted_variation(nu: DensityMeasure, g: GeometricSequence, A: RepresentableSet = NATURALS):
    """int_A |g| ||F|| dmu."""
    if nu.is_diagonal:
        return seq_sum(abs(g * nu.atom_weights), A)
    mu = nu.space.weights
    total = Fraction(0)
    for t in _head(nu, A):
        total = total + abs(g(t)) * mu(t) * norm(nu.F(t))
    if not nu.tail_vector.is_zero:
        total = total + seq_sum(abs(g) * nu.atom_weights, A) * norm(nu.tail_vector)
    return total


def variation(nu: DensityMeasure, A: RepresentableSet = NATURALS):
    """|nu_F|(A) = int_A ||F|| dmu, valid for locally Bochner F."""
    if not nu.local.locally_bochner:
        raise NotLocallyBochnerError("the variation formula needs a locally Bochner density")
    return weighted_variation(nu, ONE, A)


def variation_bruteforce_witness(nu: DensityMeasure, A: RepresentableSet):
    """(sup over partitions {A_j} of A of sum_j ||nu_F(A_j)||, first maximizing partition)."""
    if not A.is_finite or len(A.points) > BRUTEFORCE_LIMIT:
        raise TooLargeError(f"partition enumeration needs a finite set of at most {BRUTEFORCE_LIMIT} points")
    points = A.elements()
    if not points:
        return Fraction(0), []
    # nu_F on each block, assembled from singleton values by finite additivity
    singles = [evaluate_measure(nu, RepresentableSet.finite([x])) for x in points]
    values: dict = {}
    exact: dict = {}
    for mask in range(1, 1 << len(points)):
        low = mask & -mask
        i = low.bit_length() - 1
        values[mask] = singles[i] if mask == low else values[mask ^ low] + singles[i]
        exact[mask] = value_norm(values[mask])
    if all(isinstance(v, Fraction) for v in exact.values()):
        # compare partition sums as integers over a common denominator
        den = math.lcm(*(v.denominator for v in exact.values())) if exact else 1
        key = {m: int(v * den) for m, v in exact.items()}
        tol = 0
    else:
        key = {m: float(v) for m, v in exact.items()}
        tol = 1e-9 * max((abs(v) for v in key.values()), default=1.0) * max(len(points), 1)

    # Depth-first over block assignments: element i joins an existing block
    # or opens a new one, so leaves arrive in restricted-growth-string order.
    # Masks and the running key sum are updated in place.
    n = len(points)
    masks: list[int] = []
    rgs = [0] * n
    best = {"key": None, "exact": None, "rgs": None}

    def leaf(k) -> None:
        if best["key"] is None or k > best["key"] + tol:
            best.update(key=k, exact=None, rgs=tuple(rgs))
        elif tol and k >= best["key"] - tol:
            # within float tolerance of the best: settle exactly, first one wins ties
            if best["exact"] is None:
                best["exact"] = _partition_sum(exact, best["rgs"])
            total = _partition_sum(exact, rgs)
            if total > best["exact"]:
                best.update(key=k, exact=total, rgs=tuple(rgs))

    def visit(i: int, running) -> None:
        if i == n:
            leaf(running)
            return
        bit = 1 << i
        for b, m in enumerate(masks):
            masks[b] = m | bit
            rgs[i] = b
            visit(i + 1, running - key[m] + key[m | bit])
            masks[b] = m
        masks.append(bit)
        rgs[i] = len(masks) - 1
        visit(i + 1, running + key[bit])
        masks.pop()

    visit(0, 0)
    best_exact, best_rgs = best["exact"], best["rgs"]
    best = _partition_sum(exact, best_rgs) if best_exact is None else best_exact
    blocks = [[] for _ in range(max(best_rgs) + 1)]
    for x, b in zip(points, best_rgs):
        blocks[b].append(x)
    return best, blocks


def _partition_sum(exact: dict, rgs) -> object:
    masks = [0] * (max(rgs, default=-1) + 1)
    for i, b in enumerate(rgs):
        masks[b] |= 1 << i
    total = Fraction(0)
    for m in masks:
        total = total + exact[m]
    return total


def variation_bruteforce(nu: DensityMeasure, A: RepresentableSet):
    return variation_bruteforce_witness(nu, A)[0]


@dataclass(frozen=True)
class ScalarComponentMeasure:
    """<nu_F, x*>, with density t -> mu_t <F(t), x*>."""

    parent: DensityMeasure
    xstar: object
    density: GeometricSequence = field(init=False, repr=False)

    def __post_init__(self):
        nu = self.parent
        object.__setattr__(self, "density", nu.space.weights * nu.F.pair(self.xstar))

    def __call__(self, B: RepresentableSet) -> Fraction:
        return signed_sum(self.density, B)

    def variation(self, A: RepresentableSet = NATURALS):
        return seq_sum(abs(self.density), A)

    def integrate(self, g: GeometricSequence, A: RepresentableSet = NATURALS) -> Fraction:
        """int_A g d<nu_F, x*>."""
        return signed_sum(g * self.density, A)

    def abs_integral(self, g: GeometricSequence, A: RepresentableSet = NATURALS):
        """int_A |g| d|<nu_F, x*>|."""
        return seq_sum(abs(g * self.density), A)


def scalar_variation(comp: ScalarComponentMeasure, A: RepresentableSet = NATURALS):
    return comp.variation(A)


def null_set(nu: DensityMeasure) -> RepresentableSet:
    """The largest nu_F-null set: atoms with mu_t F(t) = 0."""
    if nu.is_diagonal:
        return nu.atom_weights.zero_set()
    head = RepresentableSet.finite(t for t in range(nu.tail_start) if atom(nu, t).is_zero)
    if nu.tail_vector.is_zero:
        return head | RepresentableSet.from_index(nu.tail_start)
    return head | (nu.atom_weights.zero_set() - RepresentableSet.interval(0, nu.tail_start))


def is_nu_null(nu: DensityMeasure, A: RepresentableSet) -> bool:
    by_atoms = A <= null_set(nu)
    by_semivariation = semivariation(nu, A) == 0
    if by_atoms != by_semivariation:
        raise InconsistencyError(f"null test disagrees on {A!r}: atoms {by_atoms}, semivariation {by_semivariation}")
    return by_atoms


def bounded(nu: DensityMeasure) -> bool:
    return semivariation(nu) is not INF


def strongly_additive(nu: DensityMeasure) -> bool:
    """nu_F(B_n) -> 0 for every disjoint sequence.

    In R^n (no copy of c0) a bounded vector measure is strongly additive and
    conversely, so boundedness decides it.  For the c0 diagonal the atoms
    nu_F({t}) = mu_t s(t) e_t have norm |mu_t s(t)|, which must tend to 0; and
    when it does, every disjoint sequence has sup-norms bounded by the tail.
    """
    if nu.is_diagonal:
        return nu.atom_weights.tends_to_zero()
    return bounded(nu)
