"""Named verification checks run against a scenario.

Each check computes the same quantity along two independent routes (or an
implication between verdicts) and records one row per comparison.  A check
passes when every row does; the first failing row is kept as its witness.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import density as dm
from . import l1
from .banach import C0DiagonalVector, in_dual_ball, l1_norm, norm_squared
from .errors import NotLocallyPettisError, ValidationError, VecMeasureError
from .functions import DiagonalFunction, multiply
from .integration import (
    bochner_integral,
    dunford_norm,
    locally_integrable,
    pettis_decide,
    pettis_integral,
)
from .measure_space import in_sigma_f, is_mu_null, measure
from .oracles import sample_dual_ball, sample_l1_ball
from .scalars import (
    INF,
    ONE,
    GeometricSequence,
    delta,
    fmt,
    geometric,
    indicator,
    parse_extended,
    seq_sum,
    signed_sum,
)
from .serialize import Scenario, encode
from .sets import NATURALS, RepresentableSet

SAMPLES_PER_SET = 48
BRUTEFORCE_SIZE = 8
APPROX_TOL = 1e-9


def agree(a, b) -> bool:
    """Exact equality, or closeness within 1e-9 once a float is involved."""
    if a is INF or b is INF or a == math.inf or b == math.inf:
        return (a is INF or a == math.inf) and (b is INF or b == math.inf)
    if isinstance(a, float) or isinstance(b, float):
        return math.isclose(float(a), float(b), rel_tol=APPROX_TOL, abs_tol=APPROX_TOL)
    return a == b


def at_most(a, b) -> bool:
    if b is INF:
        return True
    if a is INF:
        return False
    if isinstance(a, float) or isinstance(b, float):
        return float(a) <= float(b) + APPROX_TOL * max(1.0, abs(float(b)))
    return a <= b


def _vectors_agree(x, y) -> bool:
    if isinstance(x, C0DiagonalVector):
        return x.entries == y.entries
    return x.coords == y.coords


def _sum_vectors(x, y):
    return x + y


def _difference(x, y):
    if isinstance(x, C0DiagonalVector):
        return C0DiagonalVector(x.entries - y.entries)
    return x - y


@dataclass
class CheckResult:
    name: str
    rows: list = field(default_factory=list)
    witness: dict | None = None

    @property
    def passed(self) -> bool:
        return self.witness is None

    def row(self, ok: bool, **values) -> None:
        entry = encode(values)
        entry["ok"] = bool(ok)
        self.rows.append(entry)
        if not ok and self.witness is None:
            self.witness = entry

    def note(self, **values) -> None:
        self.rows.append(encode(values))

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "verdict": "PASS" if self.passed else "FAIL",
            "rows": self.rows,
            "witness": self.witness,
        }


class Context:
    """Shared, lazily built objects for one scenario."""

    def __init__(self, scenario: Scenario):
        self.scenario = scenario
        self.space = scenario.space
        self.F = scenario.F
        self.local = locally_integrable(self.F, self.space)
        self.verdict = pettis_decide(self.F, self.space)
        try:
            self.nu = dm.DensityMeasure(self.F, self.space)
            self.nu_error = None
        except NotLocallyPettisError as exc:
            self.nu, self.nu_error = None, str(exc)
        sets = list(scenario.sets)
        if NATURALS not in sets:
            sets.append(NATURALS)
        self.sets = sets

    @property
    def is_diagonal(self) -> bool:
        return isinstance(self.F, DiagonalFunction)

    @property
    def multipliers(self) -> list[GeometricSequence]:
        out = list(self.scenario.multipliers)
        if ONE not in out:
            out.append(ONE)
        return out

    def sigma_f_sets(self) -> list[RepresentableSet]:
        return [A for A in self.sets if in_sigma_f(self.space, A)]

    def rng(self, check: str) -> random.Random:
        return random.Random(f"{self.scenario.name}:{check}")

    def functionals(self, rng: random.Random, count: int = SAMPLES_PER_SET) -> list:
        if self.is_diagonal:
            return sample_l1_ball(rng, count)
        return sample_dual_ball(self.F.space, rng, count)

    def component(self, xstar) -> dm.ScalarComponentMeasure:
        return dm.ScalarComponentMeasure(self.nu, xstar)


def _requires_nu(result: CheckResult, ctx: Context) -> bool:
    if ctx.nu is None:
        # the construction must refuse exactly when F is not locally Pettis
        result.row(not ctx.local.locally_pettis, nu="undefined", reason=ctx.nu_error)
        return False
    return True


# -- checks -----------------------------------------------------------------


def check_integrability_chain(ctx: Context, result: CheckResult) -> None:
    v, local = ctx.verdict, ctx.local
    result.row(not v.bochner or v.pettis, rule="bochner => pettis", bochner=v.bochner, pettis=v.pettis)
    result.row(not v.pettis or v.dunford, rule="pettis => dunford", pettis=v.pettis, dunford=v.dunford)
    result.row(not local.locally_bochner or local.locally_pettis, rule="locally bochner => locally pettis",
               locally_bochner=local.locally_bochner, locally_pettis=local.locally_pettis)
    result.row(not v.pettis or local.locally_pettis, rule="pettis => locally pettis",
               pettis=v.pettis, locally_pettis=local.locally_pettis)
    if not ctx.is_diagonal:
        result.row(v.bochner == v.pettis == v.dunford, rule="finite dimension: all three agree",
                   bochner=v.bochner, pettis=v.pettis, dunford=v.dunford)
    if not v.dunford:
        x = v.witness
        mass = seq_sum(abs(ctx.space.weights * ctx.F.pair(x)))
        size = l1_norm(x) if ctx.is_diagonal else None
        ok = mass is INF and (size is None or size <= 1) and (ctx.is_diagonal or in_dual_ball(x))
        result.row(ok, rule="dunford witness diverges", witness=x, integral=mass)
    elif not v.pettis:
        result.row(isinstance(v.witness, C0DiagonalVector) and not v.witness.in_c0,
                   rule="pettis witness escapes c0", witness=v.witness)
    if v.bochner:
        b = bochner_integral(ctx.F, ctx.space)
        p = pettis_integral(ctx.F, ctx.space)
        result.row(_vectors_agree(b, p), rule="bochner integral = pettis integral", bochner=b, pettis=p)


def check_measure_axioms(ctx: Context, result: CheckResult) -> None:
    space = ctx.space
    sets = ctx.sets
    for A in sets:
        for B in sets:
            D = B - A
            union = A | D
            lhs, rhs = measure(space, union), measure(space, A) + measure(space, D)
            result.row(agree(lhs, rhs), rule="mu finitely additive", A=A, D=D, union=lhs, sum=rhs)
    if not _requires_nu(result, ctx):
        return
    nu = ctx.nu
    for A in sets:
        for B in sets:
            D = B - A
            if in_sigma_f(space, A) and in_sigma_f(space, D):
                lhs = nu(A | D)
                rhs = _sum_vectors(nu(A), nu(D))
                result.row(_vectors_agree(lhs, rhs), rule="nu finitely additive", A=A, D=D, union=lhs, sum=rhs)
            C = A & B
            sc, sa = dm.semivariation(nu, C), dm.semivariation(nu, A)
            result.row(at_most(sc, sa), rule="semivariation monotone", subset=C, superset=A, small=sc, large=sa)
            vc, va = dm.weighted_variation(nu, ONE, C), dm.weighted_variation(nu, ONE, A)
            result.row(at_most(vc, va), rule="variation monotone", subset=C, superset=A, small=vc, large=va)
    for B in ctx.sigma_f_sets():
        _exhaustion(ctx, result, B)
    for A in sets:
        if is_mu_null(space, A):
            result.row(dm.is_nu_null(nu, A), rule="mu-null => nu-null", set=A)
    strict = dm.null_set(nu) - space.weights.zero_set()
    result.note(rule="nu-null but not mu-null atoms", witness=strict)


def _exhaustion(ctx: Context, result: CheckResult, B: RepresentableSet) -> None:
    """nu(B & [0,n)) -> nu(B): the remainder is dominated by a semivariation that decays geometrically."""
    nu = ctx.nu
    rate = nu.atom_weights.tail_ratio
    horizon = max(nu.tail_start, nu.atom_weights.tail_start, ctx.space.weights.tail_start, B.bound)
    total = nu(B)
    previous = None
    tails = []
    for n in range(horizon + 4):
        head, rest = B & RepresentableSet.interval(0, n), B & RepresentableSet.from_index(n)
        remainder = dm.semivariation(nu, rest)
        tails.append(remainder)
        gap_norm = dm.value_norm(_difference(total, nu(head)))
        result.row(at_most(gap_norm, remainder), rule="||nu(B) - nu(B & [0,n))|| <= semivariation of the rest",
                   set=B, n=n, gap=gap_norm, bound=remainder)
        if previous is not None:
            result.row(at_most(remainder, previous), rule="remainder nonincreasing", set=B, n=n)
        previous = remainder
        meas = measure(ctx.space, head) + measure(ctx.space, rest)
        result.row(agree(meas, measure(ctx.space, B)), rule="mu(B) = mu(B & [0,n)) + mu(B & [n,oo))", set=B, n=n)
    last, before = tails[-1], tails[-2]
    decays = agree(before, 0) or (rate < 1 and agree(last, before * rate))
    result.row(decays, rule="remainder decays geometrically to 0", set=B, ratio=rate, last=last, before=before)


def check_variation_oracle(ctx: Context, result: CheckResult) -> None:
    if not _requires_nu(result, ctx):
        return
    nu = ctx.nu
    if not nu.local.locally_bochner:
        result.note(rule="variation formula needs a locally Bochner density", applicable=False)
        return
    candidates = [A for A in ctx.sets if A.is_finite and len(A.points) <= BRUTEFORCE_SIZE]
    prefix = RepresentableSet.interval(0, min(BRUTEFORCE_SIZE, nu.tail_start + 2))
    if prefix not in candidates:
        candidates.append(prefix)
    for A in candidates:
        closed = dm.variation(nu, A)
        brute, partition = dm.variation_bruteforce_witness(nu, A)
        result.row(agree(closed, brute), rule="closed form = partition supremum", set=A,
                   closed_form=closed, bruteforce=brute, partition=partition)


def check_semivariation_oracle(ctx: Context, result: CheckResult) -> None:
    if not _requires_nu(result, ctx):
        return
    nu = ctx.nu
    rng = ctx.rng(result.name)
    rank_one = not ctx.is_diagonal and ctx.F.is_rank_one
    for A in ctx.sets:
        sv = dm.semivariation(nu, A)
        worst = None
        for x in ctx.functionals(rng):
            val = dm.scalar_variation(ctx.component(x), A)
            if not at_most(val, sv):
                worst = (x, val)
                break
        result.row(worst is None, rule="semivariation >= sampled scalar variations", set=A, semivariation=sv,
                   samples=SAMPLES_PER_SET, counterexample=None if worst is None else list(worst))
        _attainment(ctx, result, A, sv)
        var = dm.weighted_variation(nu, ONE, A)
        result.row(at_most(sv, var), rule="semivariation <= variation", set=A, semivariation=sv, variation=var)
        if rank_one:
            result.row(agree(sv, var), rule="rank one: semivariation = variation", set=A,
                       semivariation=sv, variation=var)


def _attainment(ctx: Context, result: CheckResult, A: RepresentableSet, sv) -> None:
    nu = ctx.nu
    if ctx.is_diagonal:
        t = dm.semivariation_witness(nu, A)
        if sv is INF or t is None:
            result.row(sv is INF or agree(sv, 0), rule="diagonal witness", set=A, semivariation=sv)
            return
        val = dm.scalar_variation(ctx.component(delta(t)), A)
        result.row(agree(val, sv), rule="attained at e_t", set=A, t=t, value=val, semivariation=sv)
        return
    w = dm.semivariation_witness(nu, A)
    if sv is INF:
        # some coordinate functional must see the divergence
        hits = [j for j in range(ctx.F.space.dim)
                if dm.scalar_variation(ctx.component(ctx.F.space.dual().basis(j)), A) is INF]
        result.row(bool(hits), rule="infinite semivariation seen by a coordinate", set=A, coordinates=hits)
        return
    u = w.direction
    if u is None or u.is_zero:
        result.row(agree(sv, 0), rule="zero direction", set=A, semivariation=sv)
    elif ctx.F.space.p == 2:
        x = ctx.F.space.dual().vector(u.coords)
        val = dm.scalar_variation(ctx.component(x), A)
        result.row(val == norm_squared(u), rule="witness direction attains ||u||^2", set=A,
                   signs=list(w.signs), value=val, target=norm_squared(u))
    else:
        val = dm.scalar_variation(ctx.component(w.xstar), A)
        result.row(agree(val, sv), rule="witness functional attains", set=A, signs=list(w.signs),
                   xstar=w.xstar, value=val, semivariation=sv)


def _pair(x, xstar):
    if isinstance(x, C0DiagonalVector):
        return x.pair(xstar)
    return sum((a * b for a, b in zip(x.coords, xstar.coords)), Fraction(0))


def check_pettis_duality(ctx: Context, result: CheckResult) -> None:
    if not _requires_nu(result, ctx):
        return
    nu = ctx.nu
    rng = ctx.rng(result.name)
    xs = ctx.functionals(rng, 12)
    for B in ctx.sigma_f_sets():
        value = nu(B)
        bad = [x for x in xs if _pair(value, x) != ctx.component(x)(B)]
        result.row(not bad, rule="<nu(B), x*> = <nu, x*>(B)", set=B, value=value, counterexample=bad[:1])
        via_g = l1.integrate(indicator(B), nu)
        result.row(_vectors_agree(via_g, value), rule="int chi_B dnu = nu(B)", set=B, integral=via_g, value=value)
    for g in ctx.multipliers:
        for A in ctx.sets:
            if not pettis_decide(multiply(g, ctx.F), ctx.space, A).pettis:
                continue
            bad = l1.duality_defect(g, nu, A, xs)
            result.row(not bad, rule="<int_A g dnu, x*> = int_A g d<nu, x*>", g=g, set=A,
                       counterexample=bad[:1])


def check_dunford_bounded(ctx: Context, result: CheckResult) -> None:
    if not _requires_nu(result, ctx):
        return
    nu = ctx.nu
    result.row(ctx.verdict.dunford == dm.bounded(nu), rule="dunford <=> bounded semivariation",
               dunford=ctx.verdict.dunford, bounded=dm.bounded(nu), semivariation=dm.semivariation(nu))
    if ctx.verdict.pettis:
        for A in ctx.sets:
            sv, dn = dm.semivariation(nu, A), dunford_norm(ctx.F, ctx.space, A)
            result.row(agree(sv, dn), rule="semivariation = ||chi_A F||_P", set=A, semivariation=sv, norm=dn)


def check_null_sets(ctx: Context, result: CheckResult) -> None:
    if not _requires_nu(result, ctx):
        return
    nu = ctx.nu
    Z = dm.null_set(nu)
    result.row(dm.is_nu_null(nu, Z), rule="largest null set is null", null_set=Z)
    for A in ctx.sets:
        mu_null, nu_null = is_mu_null(ctx.space, A), dm.is_nu_null(nu, A)
        result.row(not mu_null or nu_null, rule="mu-null => nu-null", set=A, mu_null=mu_null, nu_null=nu_null)
        if nu_null and in_sigma_f(ctx.space, A):
            zero = nu(A)
            ok = zero.entries.is_zero if isinstance(zero, C0DiagonalVector) else zero.is_zero
            result.row(ok, rule="nu vanishes on null sets", set=A, value=zero)
    for t in range(max(nu.tail_start, nu.atom_weights.tail_start) + 2):
        a = dm.atom(nu, t)
        zero = a.entries.is_zero if isinstance(a, C0DiagonalVector) else a.is_zero
        result.row(zero == (t in Z), rule="atom zero <=> in null set", t=t, atom=a)
    result.note(rule="nu-null but not mu-null atoms", witness=Z - ctx.space.weights.zero_set())


def check_bochner_criterion(ctx: Context, result: CheckResult) -> None:
    bochner = ctx.verdict.bochner
    if ctx.nu is None:
        result.row(not bochner, rule="no nu_F => not Bochner", bochner=bochner)
        return
    total = dm.weighted_variation(ctx.nu, ONE, NATURALS)
    rhs = ctx.local.locally_bochner and total is not INF
    result.row(bochner == rhs, rule="bochner <=> locally bochner and bounded variation", bochner=bochner,
               locally_bochner=ctx.local.locally_bochner, variation=total)


def check_pettis_criterion(ctx: Context, result: CheckResult) -> None:
    pettis = ctx.verdict.pettis
    if ctx.nu is None:
        result.row(not pettis, rule="no nu_F => not Pettis", pettis=pettis)
        return
    sa = dm.strongly_additive(ctx.nu)
    result.row(pettis == (ctx.local.locally_pettis and sa), rule="pettis <=> locally pettis and strongly additive",
               pettis=pettis, locally_pettis=ctx.local.locally_pettis, strongly_additive=sa)


def check_dunford_isometry(ctx: Context, result: CheckResult) -> None:
    if not _requires_nu(result, ctx):
        return
    nu = ctx.nu
    for g in ctx.multipliers:
        iso = l1.mf_isometry_check(g, nu)
        result.row(agree(iso.lhs, iso.rhs), rule="||g||_nu = ||gF||_D", g=g, lhs=iso.lhs, rhs=iso.rhs)
        v = pettis_decide(multiply(g, ctx.F), ctx.space)
        c = l1.classify(g, nu)
        result.row(c.in_L1w == v.dunford, rule="L1w <=> gF dunford", g=g, in_L1w=c.in_L1w, dunford=v.dunford)
        result.row(c.in_L1 == v.pettis, rule="L1 <=> gF pettis", g=g, in_L1=c.in_L1, pettis=v.pettis)
        chain = (not c.in_L1_of_variation or c.in_L1) and (not c.in_L1 or c.in_L1w)
        result.row(chain, rule="L1(|nu|) c L1 c L1w", g=g, verdict=[c.in_L1_of_variation, c.in_L1, c.in_L1w])
        result.row(at_most(c.nu_norm, c.variation_norm), rule="||g||_nu <= int |g| d|nu|", g=g,
                   nu_norm=c.nu_norm, variation_norm=c.variation_norm)
        if c.in_L1:
            p = pettis_integral(multiply(g, ctx.F), ctx.space)
            result.row(_vectors_agree(c.integral, p), rule="int g dnu = P-int gF", g=g, integral=c.integral, pettis=p)


def check_bochner_isometry(ctx: Context, result: CheckResult) -> None:
    if not _requires_nu(result, ctx):
        return
    nu = ctx.nu
    if not nu.local.locally_bochner:
        result.note(rule="needs a locally Bochner density", applicable=False)
        return
    for g in ctx.multipliers:
        iso = l1.l1_variation_check(g, nu)
        result.row(agree(iso.lhs, iso.rhs), rule="int |g| d|nu| = int ||gF|| dmu", g=g, lhs=iso.lhs, rhs=iso.rhs)
        bochner = pettis_decide(multiply(g, ctx.F), ctx.space).bochner
        member = iso.lhs is not INF
        result.row(member == bochner, rule="L1(|nu|) <=> gF bochner", g=g, in_L1_of_variation=member,
                   bochner=bochner)


def _rank_one_parts(F):
    x = next((v for s, v in F.terms if not v.is_zero and not s.is_zero), None)
    if x is None:
        return None, None
    j = next(i for i, c in enumerate(x.coords) if c != 0)
    f = GeometricSequence()
    for s, v in F.terms:
        f = f + s.scale(v[j] / x[j])
    return f, x


def check_rank_one_collapse(ctx: Context, result: CheckResult) -> None:
    if ctx.is_diagonal or not ctx.F.is_rank_one:
        result.note(rule="needs a rank-one density", applicable=False)
        return
    if not _requires_nu(result, ctx):
        return
    nu = ctx.nu
    f, x = _rank_one_parts(ctx.F)
    for A in ctx.sets:
        sv, var = dm.semivariation(nu, A), dm.weighted_variation(nu, ONE, A)
        result.row(agree(sv, var), rule="semivariation = variation", set=A, semivariation=sv, variation=var)
    for g in ctx.multipliers:
        c = l1.classify(g, nu)
        result.row(c.in_L1_of_variation == c.in_L1 == c.in_L1w, rule="L1(|nu|) = L1(nu) = L1w(nu)", g=g,
                   verdict=[c.in_L1_of_variation, c.in_L1, c.in_L1w])
        if c.in_L1 and x is not None:
            expected = x.scale(signed_sum(ctx.space.weights * g * f))
            result.row(_vectors_agree(c.integral, expected), rule="int g dnu = (int g f dmu) x", g=g,
                       integral=c.integral, expected=expected)


def check_simple_density(ctx: Context, result: CheckResult) -> None:
    if not _requires_nu(result, ctx):
        return
    nu = ctx.nu
    for g in ctx.multipliers:
        if not l1.in_L1(g, nu):
            continue
        cert = l1.defect_certificate(g, nu)
        previous = None
        for n in range(cert.start + 5):
            approx = l1.simple_function_approximation(g, nu, n)
            result.row(approx.s_n.tail_is_zero and approx.s_n.tail_start <= n, rule="s_n is simple", g=g, n=n)
            if previous is not None:
                result.row(at_most(approx.defect, previous), rule="defect nonincreasing", g=g, n=n,
                           defect=approx.defect, previous=previous)
            if n >= cert.start:
                result.row(agree(approx.defect, cert(n)), rule="defect matches closed-form tail", g=g, n=n,
                           defect=approx.defect, closed_form=cert(n))
            previous = approx.defect
        result.row(cert.ratio < 1 or agree(cert.coeff, 0), rule="defect -> 0", g=g, coeff=cert.coeff,
                   ratio=cert.ratio)


def _perturb_on(g: GeometricSequence, Z: RepresentableSet) -> GeometricSequence:
    out = g
    for t in range(12):
        if t in Z:
            out = out + delta(t, 5)
    ray = next((k for k in range(12) if RepresentableSet.from_index(k) <= Z), None)
    if ray is not None:
        out = out * indicator(RepresentableSet.interval(0, ray)) + geometric(7, 2, ray)
    return out


def check_null_invariance(ctx: Context, result: CheckResult) -> None:
    """Quantities depend only on the nu_F-a.e. class of g."""
    if not _requires_nu(result, ctx):
        return
    nu = ctx.nu
    Z = dm.null_set(nu)
    for g in ctx.multipliers:
        h = _perturb_on(g, Z)
        a, b = l1.classify(g, nu), l1.classify(h, nu)
        same = (a.in_L1w, a.in_L1, a.in_L1_of_variation) == (b.in_L1w, b.in_L1, b.in_L1_of_variation)
        result.row(same and agree(a.nu_norm, b.nu_norm) and agree(a.variation_norm, b.variation_norm),
                   rule="class invariants", g=g, perturbed=h, nu_norm=[a.nu_norm, b.nu_norm])
        if a.in_L1 and b.in_L1:
            result.row(_vectors_agree(a.integral, b.integral), rule="integral class invariant", g=g,
                       integral=[a.integral, b.integral])
        da, db = dunford_norm(multiply(g, ctx.F), ctx.space), dunford_norm(multiply(h, ctx.F), ctx.space)
        result.row(agree(da, db), rule="||gF||_D class invariant", g=g, values=[da, db])


EXPECT_KEYS = (
    "bochner", "pettis", "dunford", "locally_pettis", "locally_bochner", "bounded", "strongly_additive",
    "semivariation", "variation", "nu_norm", "in_L1w", "in_L1", "in_L1_of_variation", "rank_one",
)


def _observed(ctx: Context, key: str):
    v, nu = ctx.verdict, ctx.nu
    simple = {
        "bochner": lambda: v.bochner,
        "pettis": lambda: v.pettis,
        "dunford": lambda: v.dunford,
        "locally_pettis": lambda: ctx.local.locally_pettis,
        "locally_bochner": lambda: ctx.local.locally_bochner,
        "rank_one": lambda: (not ctx.is_diagonal) and ctx.F.is_rank_one,
        "bounded": lambda: dm.bounded(nu),
        "strongly_additive": lambda: dm.strongly_additive(nu),
        "semivariation": lambda: dm.semivariation(nu),
        "variation": lambda: dm.weighted_variation(nu, ONE, NATURALS),
    }
    if key in simple:
        return simple[key]()
    per_g = {
        "nu_norm": lambda g: l1.nu_norm(g, nu),
        "in_L1w": lambda g: l1.in_L1w(g, nu),
        "in_L1": lambda g: l1.in_L1(g, nu),
        "in_L1_of_variation": lambda g: l1.weighted_total_variation(g, nu) is not INF,
    }
    return [per_g[key](g) for g in ctx.scenario.multipliers]


def _normalize_expected(value):
    if isinstance(value, bool):
        return value
    if isinstance(value, list):
        return [_normalize_expected(v) for v in value]
    return fmt(parse_extended(value))


def _matches(observed, expected) -> bool:
    if isinstance(expected, list):
        return isinstance(observed, list) and len(observed) == len(expected) and all(
            _matches(o, e) for o, e in zip(observed, expected))
    if isinstance(expected, bool) or isinstance(observed, bool):
        return observed is expected
    return agree(observed, parse_extended(expected))


def check_expectations(ctx: Context, result: CheckResult) -> None:
    for key in sorted(ctx.scenario.expect):
        expected = _normalize_expected(ctx.scenario.expect[key])
        if ctx.nu is None and key not in ("bochner", "pettis", "dunford", "locally_pettis", "locally_bochner",
                                          "rank_one"):
            result.row(False, key=key, expected=expected, observed="nu_F undefined")
            continue
        observed = _observed(ctx, key)
        result.row(_matches(observed, expected), key=key, expected=expected, observed=observed)


CHECKS: dict[str, Callable[[Context, CheckResult], None]] = {
    "integrability-chain": check_integrability_chain,
    "measure-axioms": check_measure_axioms,
    "variation-oracle": check_variation_oracle,
    "semivariation-oracle": check_semivariation_oracle,
    "pettis-duality": check_pettis_duality,
    "dunford-bounded": check_dunford_bounded,
    "null-sets": check_null_sets,
    "bochner-criterion": check_bochner_criterion,
    "pettis-criterion": check_pettis_criterion,
    "dunford-isometry": check_dunford_isometry,
    "bochner-isometry": check_bochner_isometry,
    "rank-one-collapse": check_rank_one_collapse,
    "simple-density": check_simple_density,
    "null-invariance": check_null_invariance,
    "expectations": check_expectations,
}

INVARIANT_SUITE = tuple(name for name in CHECKS if name != "expectations")


def validate_expectations(scenario: Scenario) -> None:
    unknown = sorted(set(scenario.expect) - set(EXPECT_KEYS))
    if unknown:
        raise ValidationError(f"expect: unknown key(s) {unknown}; known: {list(EXPECT_KEYS)}", "expect")
    for key, value in scenario.expect.items():
        try:
            _normalize_expected(value)
        except (TypeError, ValueError, ZeroDivisionError):
            raise ValidationError(f"expect.{key}: cannot read {value!r}", f"expect.{key}") from None


@dataclass
class ScenarioReport:
    name: str
    results: list

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def first_failure(self) -> CheckResult | None:
        return next((r for r in self.results if not r.passed), None)

    def to_json(self) -> dict:
        return {
            "scenario": self.name,
            "verdict": "PASS" if self.passed else "FAIL",
            "checks": [r.to_json() for r in self.results],
        }


def run_check(ctx: Context, name: str) -> CheckResult:
    result = CheckResult(name)
    try:
        CHECKS[name](ctx, result)
    except VecMeasureError as exc:
        result.row(False, error=f"{type(exc).__name__}: {exc}")
    return result


def run_scenario(scenario: Scenario, checks=None) -> ScenarioReport:
    names = scenario.checks if checks is None else tuple(checks)
    if not names:
        return ScenarioReport(scenario.name, [])
    ctx = Context(scenario)
    return ScenarioReport(scenario.name, [run_check(ctx, n) for n in names])
