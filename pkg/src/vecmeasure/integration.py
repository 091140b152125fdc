"""Bochner, Dunford and Pettis integrals against an atomic measure.

For a rank-decomposed F every integral splits into a head (the finitely many
atoms before F's tail start) and a tail on which F(t) = r**t w; the tail
contributes ``(sum_{t in A, t >= T} mu_t r**t) * w`` in closed form.

The three integrability notions are decided along separate routes:
Bochner from the norm integral, Dunford from the coordinate (or e_t)
functionals, Pettis from the existence of the candidate integral.  In finite
dimensions the three coincide, which the test suite checks rather than the
code assuming it.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .banach import C0DiagonalVector, FiniteDimVector, dual_ball_abs_max, norm
from .errors import (
    NotBochnerIntegrableError,
    NotDunfordError,
    NotLocallyDeterminedError,
    NotPettisError,
)
from .functions import DiagonalFunction, RankDecomposedFunction, VectorFunction
from .measure_space import (
    AtomicMeasureSpace,
    finite_measure_sets_are_finite,
    validate_locally_determined,
)
from .scalars import INF, GeometricSequence, geometric, seq_sum, seq_sup, signed_sum
from .sets import NATURALS, RepresentableSet


@dataclass(frozen=True)
class IntegrabilityVerdict:
    bochner: bool
    pettis: bool
    dunford: bool
    dunford_norm: object
    bochner_norm: object
    witness: object = None


@dataclass(frozen=True)
class LocalIntegrability:
    locally_pettis: bool
    locally_bochner: bool
    reason: str


def _require_semifinite(space: AtomicMeasureSpace) -> None:
    if not validate_locally_determined(space):
        raise NotLocallyDeterminedError(f"atoms {sorted(space.infinite_atoms)} have infinite mass")


def head_indices(F: RankDecomposedFunction, A: RepresentableSet) -> list[int]:
    return list(A.members_below(F.tail_start))


def tail_weights(F: RankDecomposedFunction, space: AtomicMeasureSpace) -> GeometricSequence:
    """t -> mu_t r**t for t >= tail_start, zero before; F(t) = this * w / mu_t."""
    return space.weights * geometric(1, F.tail_ratio, F.tail_start)


def tail_mass(F: RankDecomposedFunction, space: AtomicMeasureSpace, A: RepresentableSet):
    return seq_sum(tail_weights(F, space), A)


def _weighted_density(F: DiagonalFunction, space: AtomicMeasureSpace) -> GeometricSequence:
    return space.weights * F.s


def norm_integral(F: VectorFunction, space: AtomicMeasureSpace, A: RepresentableSet = NATURALS):
    """int_A ||F|| dmu (possibly +oo)."""
    _require_semifinite(space)
    if isinstance(F, DiagonalFunction):
        return seq_sum(abs(_weighted_density(F, space)), A)
    total = Fraction(0)
    for t in head_indices(F, A):
        total = total + space.weights(t) * norm(F(t))
    if not F.tail_vector.is_zero:
        total = total + tail_mass(F, space, A) * norm(F.tail_vector)
    return total


def dunford_norm(F: VectorFunction, space: AtomicMeasureSpace, A: RepresentableSet = NATURALS):
    """sup over the dual unit ball of int_A |<F, x*>| dmu, i.e. ||chi_A F||_D."""
    _require_semifinite(space)
    if isinstance(F, DiagonalFunction):
        # extreme points of the l1 ball are +-e_t
        return seq_sup(abs(_weighted_density(F, space)), A)
    terms = [(space.weights(t), F(t)) for t in head_indices(F, A)]
    if not F.tail_vector.is_zero:
        terms.append((tail_mass(F, space, A), F.tail_vector))
    return dual_ball_abs_max(terms)


def _unbounded_witness(h: GeometricSequence) -> GeometricSequence:
    """An l1 functional x* with sum |h(t) x*(t)| = oo, for h with tail ratio > 1."""
    rho = (1 + h.tail_ratio) / 2
    x = geometric(1, 1 / rho)
    return x.scale(1 / seq_sum(x))


def _dunford(F: VectorFunction, space: AtomicMeasureSpace, A: RepresentableSet):
    if isinstance(F, DiagonalFunction):
        h = abs(_weighted_density(F, space)).restrict(A)
        if seq_sup(h) is INF:
            return False, _unbounded_witness(h)
        return True, None
    for j in range(F.space.dim):
        if seq_sum(abs(space.weights * F.coordinate(j)), A) is INF:
            return False, F.space.dual().basis(j)
    return True, None


def _pettis(F: VectorFunction, space: AtomicMeasureSpace, A: RepresentableSet):
    if isinstance(F, DiagonalFunction):
        candidate = C0DiagonalVector(_weighted_density(F, space).restrict(A))
        return candidate.in_c0, (None if candidate.in_c0 else candidate)
    for j in range(F.space.dim):
        h = space.weights * F.coordinate(j)
        if seq_sum(h.positive_part(), A) is INF or seq_sum(h.negative_part(), A) is INF:
            return False, F.space.dual().basis(j)
    return True, None


def pettis_decide(F: VectorFunction, space: AtomicMeasureSpace, A: RepresentableSet = NATURALS) -> IntegrabilityVerdict:
    """Integrability verdict for chi_A F (F itself when A = N)."""
    _require_semifinite(space)
    bnorm = norm_integral(F, space, A)
    dunford, dwit = _dunford(F, space, A)
    pettis, pwit = _pettis(F, space, A)
    pettis = pettis and dunford
    return IntegrabilityVerdict(
        bochner=bnorm is not INF,
        pettis=pettis,
        dunford=dunford,
        dunford_norm=dunford_norm(F, space, A),
        bochner_norm=bnorm,
        witness=dwit if not dunford else pwit,
    )


def pettis_integral(F: VectorFunction, space: AtomicMeasureSpace, A: RepresentableSet = NATURALS):
    """P-int_A F dmu, the Pettis integral of chi_A F."""
    _require_semifinite(space)
    dunford, dwit = _dunford(F, space, A)
    if not dunford:
        raise NotDunfordError(f"chi_A F is not Dunford integrable over {A!r}", dwit)
    pettis, pwit = _pettis(F, space, A)
    if not pettis:
        raise NotPettisError(f"the candidate integral over {A!r} escapes c0", pwit)
    if isinstance(F, DiagonalFunction):
        return C0DiagonalVector(_weighted_density(F, space).restrict(A))
    return F.space.vector(signed_sum(space.weights * F.coordinate(j), A) for j in range(F.space.dim))


def bochner_integral(F: VectorFunction, space: AtomicMeasureSpace, B: RepresentableSet = NATURALS):
    """B-int_B F dmu, summed atom by atom with the tail in closed form."""
    total_norm = norm_integral(F, space, B)
    if total_norm is INF:
        raise NotBochnerIntegrableError(f"int ||F|| dmu diverges over {B!r}", total_norm)
    if isinstance(F, DiagonalFunction):
        return C0DiagonalVector(_weighted_density(F, space).restrict(B))
    out: FiniteDimVector = F.space.zero()
    for t in head_indices(F, B):
        out = out + F(t).scale(space.weights(t))
    if not F.tail_vector.is_zero:
        out = out + F.tail_vector.scale(tail_mass(F, space, B))
    return out


def locally_integrable(F: VectorFunction, space: AtomicMeasureSpace) -> LocalIntegrability:
    """Decide chi_B F in P (resp. B) for every B in Sigma^f.

    Either the weights have a nonzero tail with ratio >= 1, in which case every
    set of finite measure (representable or not) is finite and chi_B F is a
    finite sum; or mu(N) < oo, in which case N itself is in Sigma^f and the
    local notions reduce to the global ones over N.
    """
    _require_semifinite(space)
    if finite_measure_sets_are_finite(space):
        return LocalIntegrability(True, True, "every set of finite measure is finite")
    verdict = pettis_decide(F, space)
    return LocalIntegrability(verdict.pettis, verdict.bochner, "mu(N) < oo, so N is in Sigma^f")
