"""Vector-valued densities and the multiplication operator g -> gF.

Two families are modelled:

* ``RankDecomposedFunction``: F(t) = sum_k s_k(t) v_k in R^n, where all
  nonzero tails share one ratio r.  Past ``tail_start`` the function is
  ``r**t * w`` for a fixed vector w (its tail normal form).
* ``DiagonalFunction``: F(t) = s(t) e_t in c0.

Both are strongly measurable by construction on an atomic space (they are
pointwise limits of their truncations to [0, n)), so weak and strong
measurability coincide here, and so do weak and strong a.e. equality.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .banach import C0DiagonalVector, FiniteDimSpace, FiniteDimVector, MixedSpaceError, pairing
from .measure_space import AtomicMeasureSpace, is_mu_null
from .scalars import GeometricSequence, delta, indicator
from .sets import RepresentableSet


@dataclass(frozen=True)
class RankDecomposedFunction:
    space: FiniteDimSpace
    terms: tuple = ()
    tail_start: int = field(init=False)
    tail_ratio: Fraction = field(init=False)
    tail_vector: FiniteDimVector = field(init=False)
    coordinates: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        terms = tuple((s, v) for s, v in self.terms)
        ratios = set()
        for s, v in terms:
            if v.space != self.space:
                raise MixedSpaceError(f"term vector in {v.space}, function targets {self.space}")
            if not s.tail_is_zero:
                ratios.add(s.tail_ratio)
        if len(ratios) > 1:
            raise ValueError(f"terms must share one tail ratio, got {sorted(ratios)}")
        w = self.space.zero()
        for s, v in terms:
            w = w + v.scale(s.tail_coeff)
        ratio = ratios.pop() if ratios else Fraction(0)
        start = max((s.tail_start for s, _ in terms), default=0)
        if w.is_zero:
            ratio = Fraction(0)
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "tail_start", start)
        object.__setattr__(self, "tail_ratio", ratio)
        object.__setattr__(self, "tail_vector", w)
        coords = []
        for j in range(self.space.dim):
            total = GeometricSequence()
            for s, v in terms:
                total = total + s.scale(v[j])
            coords.append(total)
        object.__setattr__(self, "coordinates", tuple(coords))

    def __call__(self, t: int) -> FiniteDimVector:
        out = self.space.zero()
        for s, v in self.terms:
            out = out + v.scale(s(t))
        return out

    def coordinate(self, j: int) -> GeometricSequence:
        """The scalar function t -> F(t)_j."""
        return self.coordinates[j]

    def pair(self, xstar: FiniteDimVector) -> GeometricSequence:
        """The scalar function t -> <F(t), x*>."""
        total = GeometricSequence()
        for s, v in self.terms:
            total = total + s.scale(pairing(v, xstar))
        return total

    @property
    def is_rank_one(self) -> bool:
        """All values lie on one line through the origin."""
        direction = None
        for s, v in self.terms:
            if s.is_zero or v.is_zero:
                continue
            if direction is None:
                direction = v
            elif not _parallel(direction, v):
                return False
        return True

    def to_json(self) -> dict:
        return {"kind": "rank", "terms": [{"seq": s.to_json(), "vec": v.to_json()} for s, v in self.terms]}


def _parallel(u: FiniteDimVector, v: FiniteDimVector) -> bool:
    n = u.space.dim
    return all(u[i] * v[j] == u[j] * v[i] for i in range(n) for j in range(i + 1, n))


@dataclass(frozen=True)
class DiagonalFunction:
    """F(t) = s(t) e_t with values in c0 (sup norm)."""

    s: GeometricSequence

    def __call__(self, t: int) -> C0DiagonalVector:
        return C0DiagonalVector(delta(t, self.s(t)))

    def pair(self, xstar: GeometricSequence) -> GeometricSequence:
        return self.s * xstar

    def norms(self) -> GeometricSequence:
        """t -> ||F(t)||_oo."""
        return abs(self.s)

    def to_json(self) -> dict:
        return {"kind": "diagonal", "seq": self.s.to_json()}


VectorFunction = Union[RankDecomposedFunction, DiagonalFunction]


def one_term(s: GeometricSequence, v: FiniteDimVector) -> RankDecomposedFunction:
    return RankDecomposedFunction(v.space, ((s, v),))


def evaluate(F: VectorFunction, t: int):
    return F(t)


def multiply(g: GeometricSequence, F: VectorFunction) -> VectorFunction:
    """The function gF."""
    if isinstance(F, DiagonalFunction):
        return DiagonalFunction(g * F.s)
    return RankDecomposedFunction(F.space, tuple((g * s, v) for s, v in F.terms))


def truncate(F: VectorFunction, A: RepresentableSet) -> VectorFunction:
    """chi_A F."""
    return multiply(indicator(A), F)


def _tail_data(F: VectorFunction):
    if isinstance(F, DiagonalFunction):
        return F.s.tail_start, None
    return F.tail_start, F.tail_ratio


def _tails_agree(F: VectorFunction, G: VectorFunction) -> bool:
    """F(t) == G(t) for every t past both tail starts."""
    if isinstance(F, DiagonalFunction):
        a, b = F.s, G.s
        return (a.tail_coeff, a.tail_ratio) == (b.tail_coeff, b.tail_ratio)
    wF, wG = F.tail_vector, G.tail_vector
    if wF.is_zero and wG.is_zero:
        return True
    return F.tail_ratio == G.tail_ratio and wF == wG


def disagreement_set(F: VectorFunction, G: VectorFunction) -> RepresentableSet:
    """A representable set containing {t : F(t) != G(t)}; exact except that
    differing tails contribute the whole ray past the tail starts."""
    if type(F) is not type(G):
        raise MixedSpaceError("cannot compare functions with different targets")
    if isinstance(F, RankDecomposedFunction) and F.space != G.space:
        raise MixedSpaceError(f"{F.space} vs {G.space}")
    K = max(_tail_data(F)[0], _tail_data(G)[0])
    head = RepresentableSet.finite(t for t in range(K) if F(t) != G(t))
    if _tails_agree(F, G):
        return head
    return head | RepresentableSet.from_index(K)


def weakly_equal_ae(F: VectorFunction, G: VectorFunction, space: AtomicMeasureSpace) -> bool:
    """F and G agree off a mu-null set.

    On an atomic space weak a.e. equality and strong a.e. equality coincide:
    coordinate functionals (or e_t for c0) separate points.
    """
    disagreement_set(F, G)  # target compatibility
    K = max(_tail_data(F)[0], _tail_data(G)[0], space.weights.tail_start)
    head = RepresentableSet.finite(t for t in range(K) if F(t) != G(t))
    if not is_mu_null(space, head):
        return False
    # Past K differing tails disagree at all but finitely many t, and the
    # weights there are either all zero or all positive.
    return _tails_agree(F, G) or is_mu_null(space, RepresentableSet.from_index(K))


@dataclass(frozen=True)
class EquivalenceTag:
    """Marks representatives that may differ on ``null_set``."""

    null_set: RepresentableSet

    def admits(self, F: VectorFunction, G: VectorFunction, space: AtomicMeasureSpace) -> bool:
        return is_mu_null(space, self.null_set) and disagreement_set(F, G) <= self.null_set
