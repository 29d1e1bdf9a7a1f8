"""Lowerable and liftable vector fields along a linear section p in L_{i,n}.

Low_X(p) is the preimage of p*(Theta_X) under the constant matrix Dp; since
the first i coordinates of p are the identity, that preimage is already the
projection of p*(Theta_X) intersected with the Jacobian module of p.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Sequence

from .config import SamplingConfig, rng_for
from .derlog import DerlogModule, VarietySpec, derlog, is_icis, is_reduced_at_origin
from .errors import HypothesisError
from .invariants import _ideal
from .poly import PolyMatrix, VecPoly, is_weighted_homogeneous, minors
from .sections import LinearSection, pullback, pullback_variety
from .stdbasis import Relation, ResourceLimitError, SubModule, colength, contains, module_equal, module_preimage


def pulled_back_fields(D: DerlogModule, p: LinearSection) -> SubModule:
    """p*(Theta_X) inside O_i^n."""
    ring = D.variety.ring
    T = p.target_ring(ring)
    ims = p.images(ring)
    return SubModule(T, p.n, [g.compose(ims, T) for g in D.generators])


def low_module(X: VarietySpec, D: DerlogModule, p: LinearSection) -> SubModule:
    return module_preimage(p.matrix(X.ring), pulled_back_fields(D, p))


def _apply_linear(p: LinearSection, v: Sequence) -> list:
    """p applied pointwise to a vector of i functions."""
    v = list(v)
    out = list(v)
    for row in p.coeffs:
        acc = v[0] * 0
        for c, e in zip(row, v):
            if c:
                acc = acc + e * c
        out.append(acc)
    return out


def is_liftable(eta: VecPoly, p: LinearSection, ring=None) -> bool:
    """p(pi_i(eta o p)) == eta o p."""
    ring = ring or eta.ring
    T = p.target_ring(ring)
    e = eta.compose(p.images(ring), T).entries
    return _apply_linear(p, e[:p.i]) == list(e)


def transversality_ideal(X: VarietySpec, D: DerlogModule, p: LinearSection) -> SubModule | None:
    """n x n minors of [Dp | eta_k o p]; None when there are fewer than n columns."""
    A = p.matrix(X.ring)
    fields = pulled_back_fields(D, p).generators
    cols = A.columns() + [g.entries for g in fields]
    if len(cols) < p.n:
        return None
    M = PolyMatrix.from_columns(cols)
    return _ideal(minors(M, p.n), p.target_ring(X.ring))


def alg_transverse(X: VarietySpec, D: DerlogModule, p: LinearSection) -> bool:
    I = transversality_ideal(X, D, p)
    return I is not None and colength(I).finite


def _monomials(ring, k):
    xs = ring.gens()
    for combo in combinations_with_replacement(range(ring.n), k):
        m = ring.one()
        for j in combo:
            m = m * xs[j]
        yield m


def damon_k(low: SubModule, theta: SubModule, cap: int) -> int | None:
    """Least k >= 1 with m^k * theta inside low, searched up to cap."""
    ring = theta.ring
    gens = [g for g in theta.generators if not g.is_zero()]
    for k in range(1, cap + 1):
        if all(contains(low, g.scale(m)) for m in _monomials(ring, k) for g in gens):
            return k
    return None


@dataclass
class LowLiftReport:
    low: SubModule
    theta_pullback: SubModule
    relation: str  # equal | strict_subset | violates
    damon_k: int | None
    transverse_off_0: bool
    reduced_pair: bool  # h and h o p both reduced
    pullback_kind: str
    k_cap: int = 0

    @property
    def inclusion_guaranteed(self) -> bool:
        """Either sufficient condition for Low inside Theta of the pullback."""
        return self.reduced_pair or self.transverse_off_0


def _reduced_pair(X: VarietySpec, p: LinearSection) -> bool | None:
    if X.kind in ("ambient", "origin"):
        return True
    if len(X.equations) != 1:
        return None
    h = X.equations[0]
    hp = pullback(h, p)
    return is_reduced_at_origin(h) and (hp.is_zero() or is_reduced_at_origin(hp))


def damon_inclusions(X: VarietySpec, D: DerlogModule, p: LinearSection, k_cap: int | None = None) -> LowLiftReport:
    low = low_module(X, D, p)
    Xp = pullback_variety(X, p)
    theta = derlog(Xp).base
    rel = module_equal(low, theta)
    relation = {Relation.EQUAL: "equal", Relation.STRICT_SUBSET: "strict_subset"}.get(rel, "violates")
    transverse = alg_transverse(X, D, p)
    if k_cap is None:
        T = transversality_ideal(X, D, p)
        c = colength(T) if T is not None else None
        proxy = c.value if c is not None and c.finite else 16
        k_cap = max(2, 2 * proxy)
    k = damon_k(low, theta, k_cap) if relation != "violates" else None
    rp = _reduced_pair(X, p)
    return LowLiftReport(low, theta, relation, k, transverse, bool(rp), Xp.kind, k_cap)


# ----------------------------------------------------------------------
# probing equality for homogeneous varieties

@dataclass
class ProbeRow:
    variety: str
    section: list
    relation: str | None
    section_equality_hypotheses: bool
    note: str = ""


def section_equality_hypotheses(X: VarietySpec, p: LinearSection) -> bool:
    """Homogeneous ICIS with n - m >= 1, i > m, and h o p a positive-dimensional ICIS."""
    hs = list(X.equations)
    m = len(hs)
    if X.kind in ("ambient", "origin") or not hs:
        return False
    if X.n - m < 1 or p.i <= m:
        return False
    if not all(is_weighted_homogeneous(h) for h in hs) or not is_icis(hs):
        return False
    hp = [pullback(h, p) for h in hs]
    if any(g.is_zero() for g in hp):
        return False
    return p.i - m >= 1 and is_icis(hp)


def conjecture_probe(corpus: Sequence[VarietySpec], sections: int = 5, cfg: SamplingConfig | None = None) -> list:
    """Compare Low_X(p) with Theta of the pullback on random sections of homogeneous varieties."""
    cfg = cfg or SamplingConfig()
    rows = []
    for idx, X in enumerate(corpus):
        if not all(is_weighted_homogeneous(h) for h in X.equations):
            raise HypothesisError(f"variety {idx} is not homogeneous")
        D = derlog(X)
        for s in range(sections):
            i = X.n - 1
            p = LinearSection.random(X.n, i, rng_for(cfg, "probe", idx, s), cfg.height)
            name = ", ".join(str(h) for h in X.equations) or X.kind
            try:
                low = low_module(X, D, p)
                theta = derlog(pullback_variety(X, p)).base
                rel = module_equal(low, theta)
                relation = {Relation.EQUAL: "equal", Relation.STRICT_SUBSET: "strict_subset"}.get(rel, "violates")
                rows.append(ProbeRow(name, p.to_json(), relation, section_equality_hypotheses(X, p)))
            except (ResourceLimitError, HypothesisError) as exc:
                rows.append(ProbeRow(name, p.to_json(), None, False, f"skipped: {exc}"))
    return rows
