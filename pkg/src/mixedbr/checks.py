"""Identity checks: compute both sides independently and return a verdict.

A verdict is PASS, FAIL, or SKIP (hypotheses of the identity not met on the
input).  All intermediate values are kept so a report can show its work.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .config import SamplingConfig, rng_for
from .derlog import VarietySpec, check_variety, derlog, is_isolated_singularity
from .errors import HypothesisError
from .invariants import (_ideal, jx_ideal, milnor, milnor_icis, mu_X, mudeh_check, r_certificate)
from .lowerable import conjecture_probe, damon_inclusions, section_equality_hypotheses
from .poly import Poly, euler_apply, is_weighted_homogeneous, jacobian_minors
from .sections import (LinearSection, milnor_level, mu_H_br, mu_H_restricted, mu_X_i, split_check)
from .stdbasis import INFINITE, colength

PASS, FAIL, SKIP = "PASS", "FAIL", "SKIP"


@dataclass
class CheckResult:
    identity: str
    statement: str
    verdict: str
    values: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)


def _v(c):
    return c.as_value() if hasattr(c, "as_value") else c


def _single_equation(X: VarietySpec) -> Poly:
    if X is None or len(X.equations) != 1:
        raise HypothesisError("this identity needs a hypersurface h")
    return X.equations[0]


def check_nus1(f: Poly, X: VarietySpec, cfg: SamplingConfig | None = None) -> CheckResult:
    stmt = "mu_X(f) = mu(f) + mu(f,h) for weighted homogeneous h with isolated singularity"
    h = _single_equation(X)
    w = X.weights
    res = CheckResult("nus1", stmt, SKIP)
    failed = []
    if f.ring.n < 2:
        failed.append("n >= 2")
    if not is_weighted_homogeneous(h, w):
        failed.append(f"h weighted homogeneous for w={w}")
    if not is_isolated_singularity(h):
        failed.append("h has an isolated singularity")
    D = derlog(X)
    mx = mu_X(f, D)
    res.values["mu_X"] = _v(mx)
    if not mx.finite:
        failed.append("mu_X(f) finite")
    mf = milnor(f)
    res.values["mu_f"] = _v(mf)
    if failed:
        res.notes.append("hypothesis fails: " + "; ".join(failed))
        # the Le-Greuel side with f first, as an illustration of the discrepancy
        if mf.finite:
            lg = colength(_ideal([f] + jacobian_minors([f, h]), f.ring))
            res.values["colength_f_plus_J(f,h)"] = _v(lg)
            if lg.finite:
                res.values["mu_fh"] = lg.value - mf.value
                if mx.finite and mx.value != lg.value:
                    res.notes.append(f"discrepancy: mu_X(f) = {mx.value} != mu(f) + mu(f,h) = {lg.value}")
        return res
    mfh = milnor_icis([h, f], cfg)
    res.values["mu_fh"] = _v(mfh)
    rhs = mf.value + mfh.value
    res.values["rhs"] = rhs
    res.verdict = PASS if mx.value == rhs else FAIL
    return res


def check_muXmuY(f: Poly, h: Poly, wf=None, wh=None) -> CheckResult:
    stmt = "mu_X(f) - mu_Y(h) = mu(f) - mu(h) for weighted homogeneous f, h"
    res = CheckResult("muXmuY", stmt, SKIP)
    ring = f.ring
    wf = tuple(wf) if wf is not None else ring.w
    wh = tuple(wh) if wh is not None else ring.w
    if ring.n < 2 or not is_weighted_homogeneous(f, wf) or not is_weighted_homogeneous(h, wh):
        res.notes.append("hypothesis fails: f, h weighted homogeneous, n >= 2")
        return res
    mf, mh = milnor(f), milnor(h)
    res.values.update(mu_f=_v(mf), mu_h=_v(mh))
    if not (mf.finite and mh.finite):
        res.notes.append("hypothesis fails: mu_X(f), mu_Y(h) finite needs isolated f and h")
        return res
    X = VarietySpec(ring, (h,), wh, "wh_hypersurface")
    Y = VarietySpec(ring, (f,), wf, "wh_hypersurface")
    mx, my = mu_X(f, derlog(X)), mu_X(h, derlog(Y))
    res.values.update(mu_X_f=_v(mx), mu_Y_h=_v(my))
    if not (mx.finite and my.finite):
        res.notes.append("hypothesis fails: mu_X(f) or mu_Y(h) infinite")
        return res
    res.values.update(lhs=mx.value - my.value, rhs=mf.value - mh.value)
    res.verdict = PASS if res.values["lhs"] == res.values["rhs"] else FAIL
    return res


def check_eqpp(f: Poly, X: VarietySpec) -> CheckResult:
    stmt = "colength(<f> + J(f,h)) = colength(<theta_w f> + J(f,h)) when the right side is finite"
    h = _single_equation(X)
    w = X.weights
    res = CheckResult("eqpp", stmt, SKIP)
    if f.ring.n < 2 or not is_weighted_homogeneous(h, w) or not is_isolated_singularity(h):
        res.notes.append("hypothesis fails: h weighted homogeneous with isolated singularity")
        return res
    J = jacobian_minors([f, h])
    rhs = colength(_ideal([euler_apply(f, w)] + J, f.ring))
    res.values["rhs"] = _v(rhs)
    if not rhs.finite:
        res.notes.append("hypothesis fails: <theta_w f> + J(f,h) has infinite colength")
        return res
    lhs = colength(_ideal([f] + J, f.ring))
    res.values["lhs"] = _v(lhs)
    res.verdict = PASS if lhs.finite and lhs.value == rhs.value else FAIL
    return res


def check_boundmutau(f: Poly, X: VarietySpec) -> CheckResult:
    stmt = "mu_X(f)/tau_X(f) <= r_f(J_X(f)), with equality iff ker(f) = <f^(r-1)> + J_X(f)"
    res = CheckResult("boundmutau", stmt, SKIP)
    D = derlog(X)
    I = jx_ideal(f, D)
    try:
        cert = r_certificate(f, I)
    except HypothesisError as exc:
        res.notes.append(f"hypothesis fails: {exc}")
        return res
    res.values.update(mu_X=cert.colength_I, tau_X=cert.colength_fI, r=cert.r,
                      ratio_attained=cert.ratio_attained, kernel_equality=cert.equality)
    ok = cert.ratio_bound_holds and cert.ratio_attained == cert.equality
    res.verdict = PASS if ok else FAIL
    return res


def check_mudeh(f: Poly, X: VarietySpec, cfg: SamplingConfig | None = None) -> CheckResult:
    stmt = "mu(h) <= (r-1) mu(f,h), r the power index of theta_w f modulo <h> + J(f,h)"
    res = CheckResult("mudeh", stmt, SKIP)
    try:
        rec = mudeh_check(f, list(X.equations), X.weights, cfg)
    except HypothesisError as exc:
        res.notes.append(f"hypothesis fails: {exc}")
        return res
    res.values.update(mu_h=rec.mu_h, mu_fh=rec.mu_fh, r=rec.r, rhs=rec.rhs,
                      equality=rec.equality, kernel_equality=rec.kernel_equality)
    res.verdict = PASS if rec.holds and rec.equality == rec.kernel_equality else FAIL
    return res


def check_split(f: Poly, X: VarietySpec, cfg: SamplingConfig | None = None) -> CheckResult:
    stmt = "mu_X^(i)(f) = mu^(i)(f) + mu^(i-1)(f,h) for i >= 2, and mu_X + mu_X^(n-1) = e(J(f)O/<f>) + e(JM(f,h))"
    res = CheckResult("split", stmt, SKIP)
    h = _single_equation(X)
    if not is_weighted_homogeneous(h):
        res.notes.append("hypothesis fails: h homogeneous")
        return res
    try:
        rep = split_check(f, h, None, cfg)
    except HypothesisError as exc:
        res.notes.append(f"hypothesis fails: {exc}")
        return res
    res.values["levels"] = [{"i": r.level, "mu_X_i": r.lhs, "mu_i": r.mu_i, "mu_fh_i_minus_1": r.mu_fh,
                             "holds": r.holds} for r in rep.levels]
    res.values.update(mu_X=rep.mu_X, mu_X_n_minus_1=rep.mu_X_n1, e_J=rep.e_J, e_JM=rep.e_JM,
                      sum_holds=rep.sum_holds)
    res.verdict = PASS if rep.holds else FAIL
    return res


def check_sumademuis(f: Poly, cfg: SamplingConfig | None = None) -> CheckResult:
    stmt = "mu_{H^(i)}(f|H^(i+1)) = mu^(i+1)(f) + mu^(i)(f), and mu_{H^(n-1)}(f) = mu(f) + mu^(n-1)(f)"
    cfg = cfg or SamplingConfig()
    res = CheckResult("sumademuis", stmt, SKIP)
    n = f.ring.n
    if not milnor(f).finite:
        res.notes.append("hypothesis fails: f has an isolated singularity")
        return res
    mus = {i: milnor_level(f, i, cfg).as_value() for i in range(1, n + 1)}
    mus[0] = 1
    ok = True
    rows = []
    for i in range(n):
        lhs = mu_H_restricted(f, i, cfg).as_value()
        rhs = mus[i + 1] + mus[i] if INFINITE not in (mus[i], mus[i + 1]) else INFINITE
        rows.append({"i": i, "lhs": lhs, "rhs": rhs})
        ok = ok and lhs == rhs
    top = mu_H_br(f, n - 1, cfg).as_value() if n >= 2 else None
    if n >= 2:
        res.values["mu_H_n_minus_1"] = top
        ok = ok and top == mus[n] + mus[n - 1]
    res.values["levels"] = rows
    res.verdict = PASS if ok else FAIL
    return res


def _section_or_random(X: VarietySpec, p, cfg, label):
    if p is not None:
        return p
    cfg = cfg or SamplingConfig()
    return LinearSection.random(X.n, X.n - 1, rng_for(cfg, label), cfg.height)


def check_prop44(X: VarietySpec, p: LinearSection | None = None, cfg: SamplingConfig | None = None) -> CheckResult:
    stmt = "Low_X(p) is contained in Theta of p^{-1}(X) when h and h o p are reduced, or p is algebraically transverse"
    res = CheckResult("prop44", stmt, SKIP)
    p = _section_or_random(X, p, cfg, "prop44")
    rep = damon_inclusions(X, derlog(X), p)
    res.values.update(section=p.to_json(), relation=rep.relation, damon_k=rep.damon_k,
                      transverse_off_0=rep.transverse_off_0, reduced_pair=rep.reduced_pair,
                      pullback_kind=rep.pullback_kind)
    if not rep.inclusion_guaranteed:
        res.notes.append("hypothesis fails: neither reducedness of h, h o p nor transversality")
        return res
    if not rep.reduced_pair:
        res.notes.append("h o p not reduced; inclusion backed by algebraic transversality")
    res.verdict = PASS if rep.relation in ("equal", "strict_subset") else FAIL
    return res


def check_prop45(X: VarietySpec, p: LinearSection | None = None, cfg: SamplingConfig | None = None) -> CheckResult:
    stmt = "Low_X(p) = Theta of p^{-1}(X) for a homogeneous ICIS X and p with h o p a positive-dimensional ICIS"
    res = CheckResult("prop45", stmt, SKIP)
    p = _section_or_random(X, p, cfg, "prop45")
    res.values["section"] = p.to_json()
    if not section_equality_hypotheses(X, p):
        res.notes.append("hypothesis fails: homogeneous ICIS with a positive-dimensional ICIS pullback")
        return res
    rep = damon_inclusions(X, derlog(X), p)
    res.values.update(relation=rep.relation, damon_k=rep.damon_k)
    res.verdict = PASS if rep.relation == "equal" else FAIL
    return res


def check_conjecture46(X: VarietySpec, cfg: SamplingConfig | None = None) -> CheckResult:
    stmt = "probe: Low_X(p) = Theta of p^{-1}(X) for homogeneous X"
    cfg = cfg or SamplingConfig()
    res = CheckResult("conjecture46", stmt, SKIP)
    if not all(is_weighted_homogeneous(h) for h in X.equations):
        res.notes.append("hypothesis fails: X homogeneous")
        return res
    rows = conjecture_probe([X], cfg.samples, cfg)
    res.values["rows"] = [{"section": r.section, "relation": r.relation, "note": r.note} for r in rows]
    rels = [r.relation for r in rows if r.relation is not None]
    if not rels:
        res.notes.append("every instance skipped")
        return res
    if any(r != "equal" for r in rels):
        res.notes.append("counterexample candidate: strict relation on a homogeneous variety")
    res.verdict = PASS if all(r == "equal" for r in rels) else FAIL
    return res


def check_lemma51(f: Poly, X: VarietySpec, cfg: SamplingConfig | None = None) -> CheckResult:
    stmt = "mu_{p^{-1}X}(f o p) >= mu^(i)(f) for every sampled section with a finite value"
    cfg = cfg or SamplingConfig()
    res = CheckResult("lemma51", stmt, SKIP)
    if not milnor(f).finite:
        res.notes.append("hypothesis fails: f has an isolated singularity")
        return res
    ok = True
    rows = []
    for i in range(1, X.n):
        lv = mu_X_i(f, X, i, cfg)
        mi = milnor_level(f, i, cfg).as_value()
        finite = [v for v in lv.samples if v is not INFINITE]
        good = mi is not INFINITE and all(v >= mi for v in finite)
        rows.append({"i": i, "samples": lv.samples, "mu_i": mi, "holds": good})
        ok = ok and good
    res.values["levels"] = rows
    res.verdict = PASS if ok else FAIL
    return res


IDENTITIES = ("nus1", "eqpp", "muXmuY", "boundmutau", "mudeh", "split", "sumademuis", "prop44", "prop45",
              "conjecture46", "lemma51")


def run_check(name: str, f: Poly | None, X: VarietySpec | None, p: LinearSection | None = None,
              cfg: SamplingConfig | None = None) -> CheckResult:
    cfg = cfg or SamplingConfig()
    if name not in IDENTITIES:
        raise ValueError(f"unknown identity {name!r}")
    need_f = name not in ("prop44", "prop45", "conjecture46")
    need_X = name != "sumademuis"
    if need_f and f is None:
        raise HypothesisError(f"{name} needs a function f")
    if need_X and X is None:
        raise HypothesisError(f"{name} needs a variety")
    if X is not None:
        check_variety(X)
    if name == "nus1":
        return check_nus1(f, X, cfg)
    if name == "eqpp":
        return check_eqpp(f, X)
    if name == "muXmuY":
        return check_muXmuY(f, _single_equation(X), None, X.weights)
    if name == "boundmutau":
        return check_boundmutau(f, X)
    if name == "mudeh":
        return check_mudeh(f, X, cfg)
    if name == "split":
        return check_split(f, X, cfg)
    if name == "sumademuis":
        return check_sumademuis(f, cfg)
    if name == "prop44":
        return check_prop44(X, p, cfg)
    if name == "prop45":
        return check_prop45(X, p, cfg)
    if name == "conjecture46":
        return check_conjecture46(X, cfg)
    return check_lemma51(f, X, cfg)
