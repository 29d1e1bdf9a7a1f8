"""Scalar invariants of a function germ f relative to a variety X.

Everything reduces to colengths of ideals built from Jacobian minors and
logarithmic vector fields, computed by the standard-basis engine.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .config import SamplingConfig, random_int, rng_for
from .derlog import DerlogModule, VarietySpec, is_icis
from .errors import HypothesisError
from .poly import Poly, euler_apply, is_weighted_homogeneous, jacobian_minors, weighted_degree
from .stdbasis import (INFINITE, ColengthResult, Relation, SubModule, colength, ideal_quotient, module_equal,
                       power_index)


@dataclass
class InvariantReport:
    values: dict = field(default_factory=dict)
    certificates: dict = field(default_factory=dict)
    seed: int | None = None
    samples: int | None = None

    def set(self, name, value):
        if isinstance(value, ColengthResult):
            value = value.as_value()
        self.values[name] = value

    def certify(self, name, theorem: str, holds: bool, **details):
        self.certificates[name] = {"theorem": theorem, "holds": bool(holds), **details}


def _ideal(polys, ring) -> SubModule:
    return SubModule.ideal([p for p in polys if not p.is_zero()], ring)


def jacobian_ideal(f: Poly) -> SubModule:
    return _ideal(f.gradient(), f.ring)


def milnor(f: Poly) -> ColengthResult:
    return colength(jacobian_ideal(f))


def ord(f: Poly) -> int:
    """Largest r with f in m^r; f must vanish at 0."""
    if f.is_zero():
        raise ValueError("ord of the zero germ is undefined")
    if f.eval_at_origin() != 0:
        raise ValueError("ord needs a germ vanishing at the origin")
    return f.ord()


# ----------------------------------------------------------------------
# Bruce-Roberts numbers

def jx_ideal(f: Poly, D: DerlogModule) -> SubModule:
    """J_X(f) generated by delta(f) over the generators delta of D."""
    return _ideal(D.apply(f), f.ring)


def jx_ideal_closed_form(f: Poly, D: DerlogModule) -> SubModule | None:
    """<theta_w f> + <h> J(f) + J(f,h) for the weighted homogeneous recipes; None otherwise."""
    X = D.variety
    if D.provenance not in ("thm2_5", "thm2_6"):
        return None
    hs = list(X.equations)
    gens = [euler_apply(f, X.weights)]
    gens += jacobian_minors([f] + hs)
    if D.provenance == "thm2_5":
        gens += [h * g for h in hs for g in f.gradient()]
    return _ideal(gens, f.ring)


def mu_X(f: Poly, D: DerlogModule, cross_check: bool = True) -> ColengthResult:
    I = jx_ideal(f, D)
    if cross_check:
        C = jx_ideal_closed_form(f, D)
        if C is not None and module_equal(I, C) != Relation.EQUAL:
            raise AssertionError("closed-form J_X(f) disagrees with the generator route")
    return colength(I)


def tau_X(f: Poly, D: DerlogModule) -> ColengthResult:
    return colength(jx_ideal(f, D) + _ideal([f], f.ring))


def c_fh(f: Poly, hs: Sequence[Poly]) -> ColengthResult:
    """colength of <h> + J(f,h), the maximal minors of the Jacobian of (f, h)."""
    hs = list(hs)
    return colength(_ideal(hs + jacobian_minors([f] + hs), f.ring))


# ----------------------------------------------------------------------
# ICIS Milnor numbers

@dataclass
class IcisResult:
    value: ColengthResult
    chain: tuple  # the recombined generators actually used
    attempts: int


def _chain_value(gs: list) -> ColengthResult | None:
    """Le-Greuel recursion along g_1, (g_1,g_2), ...; None if some prefix is not an ICIS."""
    ring = gs[0].ring
    mu = None
    for k in range(1, len(gs) + 1):
        prefix = gs[:k]
        if not is_icis(prefix):
            return None
        if k == ring.n:
            c = colength(_ideal(prefix, ring))
            return ColengthResult(True, c.value - 1) if c.finite else None
        c = colength(_ideal(prefix[:-1] + jacobian_minors(prefix), ring))
        if not c.finite:
            return None
        mu = c.value if mu is None else c.value - mu
    return ColengthResult(True, mu)


def milnor_icis_detail(gs: Sequence[Poly], cfg: SamplingConfig | None = None, retries: int = 5) -> IcisResult:
    gs = list(gs)
    if not is_icis(gs):
        raise HypothesisError("input is not an ICIS")
    cfg = cfg or SamplingConfig()
    p = len(gs)
    if p == gs[0].ring.n:
        c = colength(_ideal(gs, gs[0].ring))
        return IcisResult(ColengthResult(True, c.value - 1), tuple(gs), 0)
    v = _chain_value(gs)
    if v is not None:
        return IcisResult(v, tuple(gs), 0)
    for t in range(retries):
        rng = rng_for(cfg, "icis-chain", t)
        chain = []
        for k in range(p):
            g = gs[k] * 1
            for j in range(p):
                if j != k:
                    g = g + gs[j] * random_int(rng, cfg.height)
            chain.append(g)
        # generic recombination order also permuted
        rng.shuffle(chain)
        v = _chain_value(chain)
        if v is not None:
            return IcisResult(v, tuple(chain), t + 1)
    raise HypothesisError("every sampled Le-Greuel chain degenerated")


def milnor_icis(gs: Sequence[Poly], cfg: SamplingConfig | None = None) -> ColengthResult:
    return milnor_icis_detail(gs, cfg).value


def _wh_icis_check(hs, w):
    for h in hs:
        if h.is_zero() or not is_weighted_homogeneous(h, w):
            raise HypothesisError(f"{h} is not weighted homogeneous for w={tuple(w)}")
    if not is_icis(hs):
        raise HypothesisError("h is not an ICIS")


def milnor_icis_qraro(f: Poly, hs: Sequence[Poly], w=None, D: DerlogModule | None = None) -> ColengthResult:
    """mu(h, f) as colength(<theta_w f, h> + J(f,h)); needs mu_X(f) finite."""
    hs = list(hs)
    w = tuple(w) if w is not None else f.ring.w
    _wh_icis_check(hs, w)
    if D is None:
        from .derlog import derlog
        kind = "wh_hypersurface" if len(hs) == 1 and f.ring.n >= 2 else "wh_icis"
        D = derlog(VarietySpec(f.ring, hs, w, kind))
    if not mu_X(f, D).finite:
        raise HypothesisError("mu_X(f) is infinite")
    return colength(_ideal([euler_apply(f, w)] + hs + jacobian_minors([f] + hs), f.ring))


def principal_part(h: Poly, w) -> Poly:
    lo, _ = weighted_degree(h, w)
    return h.homogeneous_part(w, lo)


def milnor_swh(hs: Sequence[Poly], w=None) -> ColengthResult:
    """Briancon-Maynadier: colength(<theta_w h_i> + J_p(h)) for semi-weighted homogeneous h."""
    hs = list(hs)
    w = tuple(w) if w is not None else hs[0].ring.w
    if not is_icis([principal_part(h, w) for h in hs]):
        raise HypothesisError("principal parts do not form an ICIS")
    return colength(_ideal([euler_apply(h, w) for h in hs] + jacobian_minors(hs), hs[0].ring))


# ----------------------------------------------------------------------
# power index certificates

@dataclass
class RCertificate:
    r: object
    colength_I: int
    colength_fI: int
    ratio_bound_holds: bool
    ratio_attained: bool
    equality: bool  # (I : f) == <f^(r-1)> + I
    kernel_ideal: SubModule


def r_certificate(f: Poly, I: SubModule) -> RCertificate:
    ring = f.ring
    cI = colength(I)
    if not cI.finite:
        raise HypothesisError("I has infinite colength")
    r = power_index(f, I)
    if r is INFINITE:
        raise HypothesisError("no power of f lies in I")
    cfI = colength(I + _ideal([f], ring))
    K = ideal_quotient(I, f)
    target = I + _ideal([f ** (r - 1)], ring)
    eq = module_equal(K, target) == Relation.EQUAL
    return RCertificate(r, cI.value, cfI.value, cI.value <= r * cfI.value, cI.value == r * cfI.value, eq, K)


@dataclass
class MudehRecord:
    r: object
    mu_h: int
    mu_fh: int
    lhs: int
    rhs: object
    holds: bool
    equality: bool
    kernel_equality: bool


def mudeh_check(f: Poly, hs: Sequence[Poly], w=None, cfg: SamplingConfig | None = None) -> MudehRecord:
    """mu(h) <= (r-1) mu(f,h), r the power index of theta_w f modulo <h> + J(f,h)."""
    hs = list(hs)
    ring = f.ring
    w = tuple(w) if w is not None else ring.w
    mu_fh = milnor_icis_qraro(f, hs, w)
    mu_h = milnor(hs[0]) if len(hs) == 1 else milnor_icis(hs, cfg)
    tf = euler_apply(f, w)
    I = _ideal(hs + jacobian_minors([f] + hs), ring)
    r = power_index(tf, I)
    if r is INFINITE:
        raise HypothesisError("theta_w(f) is not nilpotent modulo <h> + J(f,h)")
    rhs = (r - 1) * mu_fh.value
    K = ideal_quotient(I, tf)
    keq = module_equal(K, I + _ideal([tf ** (r - 1)], ring)) == Relation.EQUAL
    return MudehRecord(r, mu_h.value, mu_fh.value, mu_h.value, rhs, mu_h.value <= rhs, mu_h.value == rhs, keq)


def e_from_mu_star(mu_star_seq: Sequence[int]) -> list:
    """e_i = mu^(i+1) + mu^(i) for i = 0..n-1, given (mu^(n), ..., mu^(0))."""
    asc = list(reversed(list(mu_star_seq)))
    return [asc[i + 1] + asc[i] for i in range(len(asc) - 1)]


def teissier_e_i(f: Poly, cfg: SamplingConfig | None = None) -> list:
    from .sections import mu_star
    return e_from_mu_star(mu_star(f, cfg or SamplingConfig()).values)
