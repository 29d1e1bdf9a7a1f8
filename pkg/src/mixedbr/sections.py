"""Generic linear sections p(x_1..x_i) = (x_1..x_i, l_{i+1}..l_n) and the sequences built on them.

Every "generic" value is a minimum over seeded random integer sections; by
semicontinuity each sampled value is an upper bound for the generic one, and a
report is flagged stable when all finite samples agree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from gmpy2 import mpq

from .config import SamplingConfig, random_int, rng_for
from .derlog import (DerlogModule, VarietySpec, ambient, classify_hypersurface, derlog, derlog_wh_hypersurface,
                     derlog_wh_icis, is_icis, origin)
from .errors import HypothesisError
from .invariants import _ideal, milnor, milnor_icis, mu_X
from .poly import Poly, PolyMatrix, RingSpec, is_weighted_homogeneous, jacobian_minors, linear_form
from .stdbasis import INFINITE, ColengthResult, colength, krull_dim


@dataclass(frozen=True)
class LinearSection:
    i: int
    n: int
    coeffs: tuple  # (n - i) rows of i rationals

    def __post_init__(self):
        if not 1 <= self.i <= self.n:
            raise ValueError("need 1 <= i <= n")
        rows = tuple(tuple(mpq(c) for c in row) for row in self.coeffs)
        if len(rows) != self.n - self.i or any(len(r) != self.i for r in rows):
            raise ValueError("coefficient matrix must be (n-i) x i")
        object.__setattr__(self, "coeffs", rows)

    @classmethod
    def identity(cls, n: int) -> "LinearSection":
        return cls(n, n, ())

    @classmethod
    def random(cls, n: int, i: int, rng, height: int) -> "LinearSection":
        return cls(i, n, tuple(tuple(random_int(rng, height) for _ in range(i)) for _ in range(n - i)))

    def target_ring(self, ring: RingSpec) -> RingSpec:
        return RingSpec(ring.vars[:self.i], None, ring.ordering)

    def images(self, ring: RingSpec) -> list:
        """The n coordinate functions of p as polynomials on the target ring."""
        T = self.target_ring(ring)
        xs = T.gens()
        return xs + [linear_form(T, row) for row in self.coeffs]

    def matrix(self, ring: RingSpec) -> PolyMatrix:
        """Dp: the constant n x i Jacobian of p."""
        T = self.target_ring(ring)
        rows = []
        for k in range(self.n):
            if k < self.i:
                rows.append([T.one() if j == k else T.zero() for j in range(self.i)])
            else:
                rows.append([T.const(c) for c in self.coeffs[k - self.i]])
        return PolyMatrix.from_rows(rows)

    def to_json(self):
        return [[str(c) for c in row] for row in self.coeffs]


def pullback(f: Poly, p: LinearSection) -> Poly:
    if f.ring.n != p.n:
        raise ValueError("ambient dimension mismatch")
    return f.compose(p.images(f.ring), p.target_ring(f.ring))


def pullback_variety(X: VarietySpec, p: LinearSection) -> VarietySpec:
    """p^{-1}(X) with its kind re-derived on the target."""
    if X.n != p.n:
        raise ValueError("ambient dimension mismatch")
    T = p.target_ring(X.ring)
    if X.kind == "ambient":
        return ambient(T)
    if X.kind == "origin":
        return origin(T)
    eqs = [pullback(h, p) for h in X.equations]
    eqs = [g for g in eqs if not g.is_zero()]
    if not eqs:
        return ambient(T)
    if len(eqs) == 1:
        return classify_hypersurface(eqs[0])
    I = _ideal(eqs, T)
    if krull_dim(I) == 0:
        return origin(T)
    if len(eqs) < T.n and is_icis(eqs):
        kind = "wh_icis" if all(is_weighted_homogeneous(g) for g in eqs) else "general"
        return VarietySpec(T, eqs, None, kind, reduced=True)
    return VarietySpec(T, eqs, None, "general", reduced=X.reduced)


# ----------------------------------------------------------------------
# sampled minima

@dataclass
class LevelResult:
    """Generic minimum over sampled sections at one level."""
    level: int
    value: ColengthResult
    stable: bool
    samples: list = field(default_factory=list)  # (value or INFINITE) per accepted sample
    witness: LinearSection | None = None
    discarded: int = 0

    def as_value(self):
        return self.value.as_value()


def _minimum(level, results, discarded=0) -> LevelResult:
    finite = [(v, wit) for v, wit in results if v is not INFINITE]
    vals = [v for v, _ in results]
    if not finite:
        return LevelResult(level, ColengthResult(False), True, vals, None, discarded)
    best, wit = min(finite, key=lambda t: t[0])
    stable = len({v for v, _ in finite}) == 1
    return LevelResult(level, ColengthResult(True, best), stable, vals, wit, discarded)


def _val(c: ColengthResult):
    return c.value if c.finite else INFINITE


@dataclass
class SequenceResult:
    values: list
    levels: list  # LevelResult per entry (None for entries fixed by definition)

    @property
    def stable(self) -> bool:
        return all(l is None or l.stable for l in self.levels)


def order_preserved(f: Poly, g: Poly) -> bool:
    """A generic linear restriction keeps the order; a jump certifies a special section."""
    if f.is_zero() or g.is_zero():
        return f.is_zero() == g.is_zero()
    return f.ord() == g.ord()


def _draw_sections(f: Poly, i: int, cfg: SamplingConfig, label: str):
    """cfg.samples sections with order-preserving restrictions, at most 3 * samples draws."""
    n = f.ring.n
    out, discarded = [], 0
    for attempt in range(3 * cfg.samples):
        if len(out) == cfg.samples:
            break
        p = LinearSection.random(n, i, rng_for(cfg, label, i, attempt), cfg.height)
        g = pullback(f, p)
        if not order_preserved(f, g):
            discarded += 1
            continue
        out.append((p, g))
    return out, discarded


def milnor_level(f: Poly, i: int, cfg: SamplingConfig) -> LevelResult:
    n = f.ring.n
    if i == n:
        return LevelResult(i, milnor(f), True, [_val(milnor(f))], LinearSection.identity(n))
    drawn, discarded = _draw_sections(f, i, cfg, "mu*")
    return _minimum(i, [(_val(milnor(g)), p) for p, g in drawn], discarded)


def mu_star(f: Poly, cfg: SamplingConfig | None = None) -> SequenceResult:
    """(mu^(n), ..., mu^(1), mu^(0)) of an isolated singularity."""
    cfg = cfg or SamplingConfig()
    n = f.ring.n
    if not milnor(f).finite:
        raise HypothesisError("f does not have an isolated singularity")
    levels = []
    for i in range(n, 0, -1):
        lv = milnor_level(f, i, cfg)
        if not lv.value.finite:
            raise HypothesisError(f"all sampled sections at level {i} are non-isolated")
        levels.append(lv)
    return SequenceResult([l.value.value for l in levels] + [1], levels + [None])


def icis_level(gs: Sequence[Poly], i: int, cfg: SamplingConfig) -> LevelResult:
    """mu^(i)(g): Milnor number of (g, l_1..l_{n-p-i+1}) for generic linear forms."""
    gs = list(gs)
    ring = gs[0].ring
    n, p = ring.n, len(gs)
    k = n - p - i + 1
    if k == 0:
        return LevelResult(i, milnor_icis(gs, cfg), True, [])
    out = []
    for s in range(cfg.samples):
        rng = rng_for(cfg, "icis-level", i, s)
        ls = [linear_form(ring, [random_int(rng, cfg.height) for _ in range(n)]) for _ in range(k)]
        full = gs + ls
        if not is_icis(full):
            out.append((INFINITE, None))
            continue
        out.append((milnor_icis(full, cfg).value, None))
    return _minimum(i, out)


def mu_star_icis(gs: Sequence[Poly], cfg: SamplingConfig | None = None) -> SequenceResult:
    cfg = cfg or SamplingConfig()
    gs = list(gs)
    if not is_icis(gs):
        raise HypothesisError("input is not an ICIS")
    n, p = gs[0].ring.n, len(gs)
    levels = [icis_level(gs, i, cfg) for i in range(n - p + 1, 0, -1)]
    vals = [l.value.value if l.value.finite else INFINITE for l in levels] + [1]
    for a, b in zip(vals, vals[1:]):
        if a is INFINITE or b is INFINITE or a < b:
            raise AssertionError(f"mu* of an ICIS failed to decrease: {vals}")
    return SequenceResult(vals, levels + [None])


def _br_on_pullback(f: Poly, X: VarietySpec, p: LinearSection):
    Xp = pullback_variety(X, p)
    return mu_X(pullback(f, p), derlog(Xp)), Xp


def mu_X_i(f: Poly, X: VarietySpec, i: int, cfg: SamplingConfig | None = None) -> LevelResult:
    """Generic minimum of mu_{p^{-1}X}(f o p) over p in L_{i,n}."""
    cfg = cfg or SamplingConfig()
    n = X.n
    if not 1 <= i <= n:
        raise ValueError("level must satisfy 1 <= i <= n")
    if i == n:
        v = mu_X(f, derlog(X))
        return LevelResult(i, v, True, [_val(v)], LinearSection.identity(n))
    wh = X.kind in ("wh_hypersurface", "wh_icis")
    out, discarded, attempt = [], 0, 0
    while len(out) < cfg.samples and attempt < 3 * cfg.samples:
        p = LinearSection.random(n, i, rng_for(cfg, "mu_X", i, attempt), cfg.height)
        attempt += 1
        if not order_preserved(f, pullback(f, p)):
            discarded += 1
            continue
        Xp = pullback_variety(X, p)
        # a weighted homogeneous X must stay so (or collapse to a point) on a general section
        if wh and Xp.kind not in ("wh_hypersurface", "wh_icis", "origin"):
            discarded += 1
            continue
        out.append((_val(mu_X(pullback(f, p), derlog(Xp))), p))
    if not out:
        raise HypothesisError(f"no admissible section at level {i}")
    return _minimum(i, out, discarded)


def mu_X_star(f: Poly, X: VarietySpec, cfg: SamplingConfig | None = None) -> SequenceResult:
    cfg = cfg or SamplingConfig()
    levels = [mu_X_i(f, X, i, cfg) for i in range(X.n, 0, -1)]
    return SequenceResult([l.as_value() for l in levels], levels)


# ----------------------------------------------------------------------
# Bruce-Roberts numbers relative to generic linear subspaces

def subspace_derlog(ring: RingSpec, forms: Sequence[Poly]) -> DerlogModule:
    """Theta_H for H = {l_1 = ... = l_k = 0} given by independent linear forms."""
    forms = list(forms)
    if not forms:
        return derlog(ambient(ring))
    if len(forms) == ring.n:
        return derlog(origin(ring))
    if len(forms) == 1:
        return derlog_wh_hypersurface(VarietySpec(ring, forms, None, "wh_hypersurface"))
    return derlog_wh_icis(VarietySpec(ring, forms, None, "wh_icis"))


def _mu_H_sample(f: Poly, i: int, rng, height: int) -> ColengthResult:
    ring = f.ring
    n = ring.n
    if i == 0:
        return mu_X(f, derlog(origin(ring)), cross_check=False)
    for _ in range(10):
        forms = [linear_form(ring, [random_int(rng, height) for _ in range(n)]) for _ in range(n - i)]
        if is_icis(forms):
            break
    else:
        raise HypothesisError("could not draw independent linear forms")
    D = subspace_derlog(ring, forms)
    return mu_X(f, D, cross_check=False)


def mu_H_br(f: Poly, i: int, cfg: SamplingConfig | None = None) -> LevelResult:
    """Bruce-Roberts number of f relative to a generic i-dimensional linear subspace of C^n."""
    cfg = cfg or SamplingConfig()
    n = f.ring.n
    if not 0 <= i <= n:
        raise ValueError("need 0 <= i <= n")
    if not milnor(f).finite:
        raise HypothesisError("f does not have an isolated singularity")
    if i == n:
        return LevelResult(i, milnor(f), True, [_val(milnor(f))])
    if i == 0:
        v = _mu_H_sample(f, 0, None, cfg.height)
        return LevelResult(0, v, True, [_val(v)])
    out = [(_val(_mu_H_sample(f, i, rng_for(cfg, "mu_H", i, k), cfg.height)), None) for k in range(cfg.samples)]
    return _minimum(i, out)


def mu_H_restricted(f: Poly, i: int, cfg: SamplingConfig | None = None) -> LevelResult:
    """mu_{H^(i)}(f restricted to H^(i+1)): restrict to a generic (i+1)-plane, then use a generic hyperplane in it."""
    cfg = cfg or SamplingConfig()
    n = f.ring.n
    if not 0 <= i <= n - 1:
        raise ValueError("need 0 <= i <= n-1")
    out = []
    if i + 1 == n:
        drawn, discarded = [(LinearSection.identity(n), f)] * cfg.samples, 0
    else:
        drawn, discarded = _draw_sections(f, i + 1, cfg, "mu_H|")
    for k, (p, g) in enumerate(drawn):
        if not milnor(g).finite:
            out.append((INFINITE, p))
            continue
        rng = rng_for(cfg, "mu_H|hyperplane", i, k)
        out.append((_val(_mu_H_sample(g, i, rng, cfg.height)), p))
    return _minimum(i, out, discarded)


# ----------------------------------------------------------------------
# the splitting identities for weighted homogeneous hypersurfaces

@dataclass
class SplitRecord:
    level: int
    lhs: object
    mu_i: object
    mu_fh: object
    holds: bool


@dataclass
class SplitReport:
    levels: list
    mu_X: object
    mu_X_n1: object
    e_J: object
    e_JM: object
    sum_holds: bool

    @property
    def holds(self) -> bool:
        return self.sum_holds and all(r.holds for r in self.levels)


def e_JM(f: Poly, h: Poly, cfg: SamplingConfig) -> LevelResult:
    """colength(<f,h> + J(f,h,l)) minimized over generic linear forms l."""
    ring = f.ring
    n = ring.n
    if n == 2:
        v = colength(_ideal([f, h], ring))
        return LevelResult(n - 1, v, True, [_val(v)])
    out = []
    for k in range(cfg.samples):
        rng = rng_for(cfg, "eJM", k)
        l = linear_form(ring, [random_int(rng, cfg.height) for _ in range(n)])
        out.append((_val(colength(_ideal([f, h] + jacobian_minors([f, h, l]), ring))), None))
    return _minimum(n - 1, out)


def split_check(f: Poly, h: Poly, w=None, cfg: SamplingConfig | None = None, levels=None) -> SplitReport:
    """mu_X^(i)(f) = mu^(i)(f) + mu^(i-1)(f,h) for i >= 2, and the sum identity at the top."""
    cfg = cfg or SamplingConfig()
    ring = f.ring
    n = ring.n
    w = tuple(w) if w is not None else ring.w
    if n < 2:
        raise HypothesisError("needs n >= 2")
    X = VarietySpec(ring, (h,), w, "wh_hypersurface")
    from .derlog import check_variety
    check_variety(X)
    D = derlog(X)
    top = mu_X(f, D)
    if not top.finite:
        raise HypothesisError("mu_X(f) is infinite")
    levels = list(range(n, 1, -1)) if levels is None else list(levels)
    if any(i < 2 or i > n for i in levels):
        raise HypothesisError("the splitting identity is stated for 2 <= i <= n only")
    recs = []
    for i in levels:
        lhs = mu_X_i(f, X, i, cfg).as_value()
        mi = milnor_level(f, i, cfg).as_value()
        mfh = icis_level([f, h], i - 1, cfg).as_value()
        ok = INFINITE not in (lhs, mi, mfh) and lhs == mi + mfh
        recs.append(SplitRecord(i, lhs, mi, mfh, ok))
    n1 = mu_X_i(f, X, n - 1, cfg).as_value()
    eJ = milnor(f).value + milnor_level(f, n - 1, cfg).as_value()
    ejm = e_JM(f, h, cfg).as_value()
    ok = INFINITE not in (n1, ejm) and top.value + n1 == eJ + ejm
    return SplitReport(recs, top.value, n1, eJ, ejm, ok)
