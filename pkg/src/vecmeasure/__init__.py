"""Exact computation with vector measures given by a density on an atomic space."""
from .banach import C0DiagonalVector, FiniteDimSpace, FiniteDimVector, dual_ball_abs_max, dual_ball_argmax, norm, pairing
from .density import (
    DensityMeasure,
    ScalarComponentMeasure,
    bounded,
    evaluate_measure,
    is_nu_null,
    scalar_variation,
    semivariation,
    strongly_additive,
    variation,
    variation_bruteforce,
)
from .errors import *  # noqa: F401,F403
from .functions import DiagonalFunction, RankDecomposedFunction, multiply, one_term, weakly_equal_ae
from .integration import (
    bochner_integral,
    dunford_norm,
    locally_integrable,
    norm_integral,
    pettis_decide,
    pettis_integral,
)
from .l1 import (
    classify,
    integrate,
    l1_variation_check,
    mf_isometry_check,
    nu_norm,
    simple_function_approximation,
    variation_norm,
)
from .measure_space import AtomicMeasureSpace, counting, in_sigma_f, is_mu_null, measure
from .scalars import INF, GeometricSequence, constant, delta, geometric, indicator, seq_sum
from .sets import EMPTY, NATURALS, RepresentableSet
from .surd import Surd

__version__ = "0.1.0"
