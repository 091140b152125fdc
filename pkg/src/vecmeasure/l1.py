"""Integration of scalar functions against nu_F.

Every quantity here is computed from the measure (scalar components of nu_F
and its atoms).  The multiplication operator g -> gF sends these to the
Dunford, Pettis and Bochner sides handled in ``integration``, and the checks
below compare the two routes.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .banach import C0DiagonalVector, norm
from .density import (
    DensityMeasure,
    ScalarComponentMeasure,
    null_set,
    weighted_semivariation,
    weighted_variation,
)
from .errors import InconsistencyError, NotLocallyBochnerError, NotNuIntegrableError
from .functions import multiply
from .integration import dunford_norm, norm_integral, pettis_decide, pettis_integral
from .scalars import INF, GeometricSequence, delta, indicator, seq_sum, seq_sup
from .sets import NATURALS, RepresentableSet


@dataclass(frozen=True)
class MultiplierVerdict:
    in_L1w: bool
    in_L1: bool
    in_L1_of_variation: bool
    nu_norm: object
    variation_norm: object
    integral: object = None


@dataclass(frozen=True)
class IsometryCheck:
    lhs: object
    rhs: object
    equal: bool


@dataclass(frozen=True)
class SimpleApproximation:
    s_n: GeometricSequence
    defect: object


@dataclass(frozen=True)
class DefectCertificate:
    """defect(n) = coeff * ratio**n for every n >= start."""

    start: int
    coeff: object
    ratio: Fraction

    def __call__(self, n: int):
        if n < self.start:
            raise ValueError(f"the closed form holds from n={self.start}")
        return self.coeff * self.ratio ** n


def normalize_multiplier(g: GeometricSequence, nu: DensityMeasure) -> GeometricSequence:
    """The representative of g's class vanishing on the nu_F-null atoms."""
    return g * indicator(null_set(nu).complement())


def _basis_components(nu: DensityMeasure) -> list[ScalarComponentMeasure]:
    dual = nu.F.space.dual()
    return [ScalarComponentMeasure(nu, dual.basis(j)) for j in range(dual.dim)]


def nu_norm(g: GeometricSequence, nu: DensityMeasure, A: RepresentableSet = NATURALS):
    """||chi_A g||_nu = sup over the dual ball of int_A |g| d|<nu_F, x*>|."""
    return weighted_semivariation(nu, normalize_multiplier(g, nu), A)


def in_L1w(g: GeometricSequence, nu: DensityMeasure) -> bool:
    g = normalize_multiplier(g, nu)
    if nu.is_diagonal:
        return seq_sup(abs(g * nu.atom_weights)) is not INF
    return all(c.abs_integral(g) is not INF for c in _basis_components(nu))


def in_L1(g: GeometricSequence, nu: DensityMeasure) -> bool:
    """g in L1_w and every set integral is a vector of X."""
    g = normalize_multiplier(g, nu)
    if nu.is_diagonal:
        # int_A g dnu_F has coordinates g(t) mu_t s(t), t in A
        return (g * nu.atom_weights).tends_to_zero()
    for c in _basis_components(nu):
        d = g * c.density
        if seq_sum(d.positive_part()) is INF or seq_sum(d.negative_part()) is INF:
            return False
    return True


def weighted_total_variation(g: GeometricSequence, nu: DensityMeasure):
    """int |g| d|nu_F|, summed atom by atom."""
    return weighted_variation(nu, normalize_multiplier(g, nu))


def variation_norm(g: GeometricSequence, nu: DensityMeasure):
    if not nu.local.locally_bochner:
        raise NotLocallyBochnerError("int |g| d|nu_F| needs a locally Bochner density")
    return weighted_total_variation(g, nu)


def integrate(g: GeometricSequence, nu: DensityMeasure, A: RepresentableSet = NATURALS):
    """int_A g dnu_F, the Pettis integral of chi_A gF, checked against the scalar components."""
    gF = multiply(g, nu.F)
    verdict = pettis_decide(gF, nu.space, A)
    if not verdict.pettis:
        raise NotNuIntegrableError(f"g is not nu_F-integrable over {A!r}", verdict.witness)
    value = pettis_integral(gF, nu.space, A)
    g = normalize_multiplier(g, nu)
    if nu.is_diagonal:
        horizon = max(nu.atom_weights.tail_start, g.tail_start) + 2
        for t in range(horizon):
            expected = ScalarComponentMeasure(nu, delta(t)).integrate(g, A)
            if value.pair(delta(t)) != expected:
                raise InconsistencyError(f"coordinate {t} of int g dnu_F: {value.pair(delta(t))} != {expected}")
    else:
        for j, c in enumerate(_basis_components(nu)):
            if value[j] != c.integrate(g, A):
                raise InconsistencyError(f"coordinate {j} of int g dnu_F: {value[j]} != {c.integrate(g, A)}")
    return value


def duality_defect(g: GeometricSequence, nu: DensityMeasure, A: RepresentableSet, xstars) -> list:
    """Functionals x* with <int_A g dnu_F, x*> != int_A g d<nu_F, x*>."""
    value = integrate(g, nu, A)
    g = normalize_multiplier(g, nu)
    bad = []
    for x in xstars:
        lhs = value.pair(x) if isinstance(value, C0DiagonalVector) else _pair(value, x)
        if lhs != ScalarComponentMeasure(nu, x).integrate(g, A):
            bad.append(x)
    return bad


def _pair(v, x) -> Fraction:
    return sum((a * b for a, b in zip(v.coords, x.coords)), Fraction(0))


def classify(g: GeometricSequence, nu: DensityMeasure) -> MultiplierVerdict:
    weak, strong = in_L1w(g, nu), in_L1(g, nu)
    total = weighted_total_variation(g, nu)
    return MultiplierVerdict(
        in_L1w=weak,
        in_L1=strong,
        in_L1_of_variation=total is not INF,
        nu_norm=nu_norm(g, nu),
        variation_norm=total,
        integral=integrate(g, nu) if strong else None,
    )


def mf_isometry_check(g: GeometricSequence, nu: DensityMeasure) -> IsometryCheck:
    """||g||_nu (measure side) against ||gF||_D (function side)."""
    lhs = nu_norm(g, nu)
    rhs = dunford_norm(multiply(g, nu.F), nu.space)
    return IsometryCheck(lhs, rhs, lhs == rhs)


def l1_variation_check(g: GeometricSequence, nu: DensityMeasure) -> IsometryCheck:
    """int |g| d|nu_F| against int ||gF|| dmu."""
    lhs = variation_norm(g, nu)
    rhs = norm_integral(multiply(g, nu.F), nu.space)
    return IsometryCheck(lhs, rhs, lhs == rhs)


def simple_function_approximation(g: GeometricSequence, nu: DensityMeasure, n: int) -> SimpleApproximation:
    if not in_L1(g, nu):
        raise NotNuIntegrableError("simple functions are dense only in L1(nu_F)", g)
    head = RepresentableSet.interval(0, n)
    return SimpleApproximation(g * indicator(head), nu_norm(g * indicator(head.complement()), nu))


def defect_certificate(g: GeometricSequence, nu: DensityMeasure) -> DefectCertificate:
    """Closed form of n -> ||g - g chi_[0,n)||_nu, valid past every head."""
    if not in_L1(g, nu):
        raise NotNuIntegrableError("no defect tail outside L1(nu_F)", g)
    g = normalize_multiplier(g, nu)
    b = abs(g * nu.atom_weights)
    if nu.is_diagonal:
        # sup_{t >= n} c rho**t with rho < 1 (or c = 0)
        return DefectCertificate(b.tail_start, b.tail_coeff, b.tail_ratio)
    start = max(nu.tail_start, b.tail_start)
    if b.tail_is_zero or nu.tail_vector.is_zero:
        return DefectCertificate(start, Fraction(0), Fraction(0))
    # sum_{t >= n} c rho**t = c rho**n / (1 - rho), times ||w||
    coeff = b.tail_coeff / (1 - b.tail_ratio) * norm(nu.tail_vector)
    return DefectCertificate(start, coeff, b.tail_ratio)
