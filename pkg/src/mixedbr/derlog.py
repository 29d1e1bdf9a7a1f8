"""Logarithmic vector fields: the module of fields tangent to X = h^{-1}(0).

Two routes are provided.  The general one projects the syzygies of the matrix
``[Dh | h_1..h_m block-diagonal]`` onto the first n coordinates (valid when the
ideal of h is reduced).  For weighted homogeneous isolated hypersurfaces and
weighted homogeneous ICIS there are explicit generating sets, and coordinate
subspaces, the origin and the ambient space have built-in answers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

import sympy

from .errors import HypothesisError, ReducednessError
from .poly import Poly, PolyMatrix, RingSpec, VecPoly, is_weighted_homogeneous, jacobian, jacobian_minors
from .stdbasis import SubModule, colength, contains, krull_dim, is_unit_ideal, minimal_generators, module_equal, syzygies

KINDS = ("general", "wh_hypersurface", "wh_icis", "linear_subspace", "origin", "ambient")


@dataclass(frozen=True)
class VarietySpec:
    ring: RingSpec
    equations: tuple
    weights_claim: tuple | None = None
    kind: str = "general"
    reduced: bool = False  # caller asserts the ideal of the equations is reduced

    def __post_init__(self):
        object.__setattr__(self, "equations", tuple(self.equations))
        if self.kind not in KINDS:
            raise ValueError(f"unknown variety kind {self.kind!r}")
        if self.kind not in ("ambient", "origin") and not self.equations:
            raise ValueError("a variety needs at least one equation")
        for h in self.equations:
            if h.ring != self.ring:
                raise ValueError("equation from a different ring")
        if self.weights_claim is not None:
            object.__setattr__(self, "weights_claim", tuple(int(a) for a in self.weights_claim))

    @property
    def n(self) -> int:
        return self.ring.n

    @property
    def weights(self) -> tuple:
        return self.weights_claim or self.ring.w

    def ideal(self) -> SubModule:
        if self.kind == "ambient":
            return SubModule.ideal([], self.ring)
        if self.kind == "origin":
            return SubModule.ideal(self.ring.gens(), self.ring)
        return SubModule.ideal(self.equations, self.ring)


def ambient(ring: RingSpec) -> VarietySpec:
    return VarietySpec(ring, (), None, "ambient")


def origin(ring: RingSpec) -> VarietySpec:
    return VarietySpec(ring, (), None, "origin")


# ----------------------------------------------------------------------
# reducedness of principal ideals

def to_sympy(f: Poly):
    gens = sympy.symbols(f.ring.vars)
    d = {e: sympy.Rational(int(c.numerator), int(c.denominator)) for e, c in f.terms.items()}
    return sympy.Poly.from_dict(d, *gens, domain="QQ") if d else sympy.Poly(0, *gens, domain="QQ")


def from_sympy(P, ring: RingSpec) -> Poly:
    from gmpy2 import mpq
    return Poly(ring, {tuple(e): mpq(int(c.p), int(c.q)) for e, c in P.terms() if c})


def reduced_equation(h: Poly) -> Poly:
    """Generator of the radical of <h> in O_n: product of the squarefree factors through 0."""
    if h.is_zero():
        return h
    _, factors = to_sympy(h).sqf_list()
    out = h.ring.one()
    for g, _mult in factors:
        g = from_sympy(g, h.ring)
        if g.eval_at_origin() == 0:
            out = out * g
    return out


def is_reduced_at_origin(h: Poly) -> bool:
    """<h> is reduced in O_n: every repeated squarefree factor is a unit at 0."""
    if h.is_zero():
        return True
    _, factors = to_sympy(h).sqf_list()
    return all(mult == 1 or from_sympy(g, h.ring).eval_at_origin() != 0 for g, mult in factors)


# ----------------------------------------------------------------------
# hypothesis checks

def is_isolated_singularity(h: Poly) -> bool:
    return colength(SubModule.ideal(h.gradient(), h.ring)).finite


def is_icis(gs: Sequence[Poly]) -> bool:
    """p <= n, dim V(g) = n - p and <g> + (maximal minors of Dg) has finite colength."""
    gs = list(gs)
    if not gs:
        return False
    ring = gs[0].ring
    n, p = ring.n, len(gs)
    if p > n or any(g.eval_at_origin() != 0 for g in gs):
        return False
    I = SubModule.ideal(gs, ring)
    if is_unit_ideal(I) or krull_dim(I) != n - p:
        return False
    return colength(SubModule.ideal(gs + jacobian_minors(gs), ring)).finite


def check_variety(X: VarietySpec) -> None:
    """Machine-check the invariants implied by ``X.kind``; raise HypothesisError otherwise."""
    n = X.n
    w = X.weights
    if X.kind == "wh_hypersurface":
        if len(X.equations) != 1:
            raise HypothesisError("wh_hypersurface needs exactly one equation")
        h = X.equations[0]
        if n < 2:
            raise HypothesisError("wh_hypersurface needs n >= 2")
        if h.is_zero() or h.eval_at_origin() != 0:
            raise HypothesisError("h must vanish at the origin")
        if not is_weighted_homogeneous(h, w):
            raise HypothesisError(f"h is not weighted homogeneous for w={w}")
        if not is_isolated_singularity(h):
            raise HypothesisError("h does not have an isolated singularity")
    elif X.kind == "wh_icis":
        p = len(X.equations)
        if p > n - 1:
            raise HypothesisError("wh_icis needs p <= n - 1 equations")
        for h in X.equations:
            if h.is_zero() or not is_weighted_homogeneous(h, w):
                raise HypothesisError(f"{h} is not weighted homogeneous for w={w}")
        if not is_icis(list(X.equations)):
            raise HypothesisError("equations do not define an ICIS")
    elif X.kind == "linear_subspace":
        coords = _coordinate_indices(X)
        if coords is None:
            raise HypothesisError("linear_subspace equations must be distinct coordinate variables")


def _coordinate_indices(X: VarietySpec):
    out = []
    for h in X.equations:
        if len(h.terms) != 1:
            return None
        (e, _), = h.terms.items()
        if sum(e) != 1:
            return None
        out.append(e.index(1))
    if len(set(out)) != len(out):
        return None
    return sorted(out)


# ----------------------------------------------------------------------
# the module

@dataclass
class DerlogModule:
    base: SubModule
    provenance: str
    variety: VarietySpec
    _minimal: SubModule | None = field(default=None, repr=False)

    @property
    def generators(self) -> tuple:
        return self.base.generators

    def minimal(self) -> SubModule:
        if self._minimal is None:
            self._minimal = minimal_generators(self.base)
        return self._minimal

    def tangency_certificate(self) -> bool:
        """Every generator maps each equation into the ideal of the variety."""
        X = self.variety
        if X.kind == "ambient":
            return True
        I = X.ideal()
        gens = list(X.equations) if X.kind != "origin" else X.ring.gens()
        return all(contains(I, d.apply(h)) for d in self.generators for h in gens)

    def apply(self, f: Poly) -> list:
        """The generators delta(f) of J_X(f)."""
        return [d.apply(f) for d in self.generators]


def _euler_field(ring: RingSpec, w) -> VecPoly:
    return VecPoly([ring.var(i) * w[i] for i in range(ring.n)], ring)


def derlog_syzygy(X: VarietySpec, assume_reduced: bool = False) -> DerlogModule:
    """Project the syzygies of the Lemma-style matrix D_h onto the first n components."""
    ring, n = X.ring, X.n
    hs = list(X.equations)
    m = len(hs)
    if X.kind in ("ambient", "origin"):
        return derlog_builtin(X)
    if not (assume_reduced or X.reduced):
        if m == 1:
            if not is_reduced_at_origin(hs[0]):
                raise ReducednessError(f"<{hs[0]}> is not reduced; use its reduced equation")
        elif not (n - m >= 1 and is_icis(hs)):
            raise ReducednessError("cannot verify reducedness of a non-principal ideal; assert it")
    cols = []
    for j in range(n):
        cols.append(VecPoly([h.diff(j) for h in hs], ring))
    zero = ring.zero()
    for i in range(m):
        for k in range(m):
            ent = [zero] * m
            ent[i] = hs[k]
            cols.append(VecPoly(ent, ring))
    syz = syzygies(SubModule(ring, m, cols))
    gens = []
    for v in syz.generators:
        d = VecPoly(v.entries[:n], ring)
        if not d.is_zero():
            gens.append(d)
    return DerlogModule(SubModule(ring, n, gens), "syzygy", X)


def derlog_wh_hypersurface(X: VarietySpec, check: bool = True) -> DerlogModule:
    if X.kind not in ("wh_hypersurface",) and check:
        raise HypothesisError(f"variety kind {X.kind} is not wh_hypersurface")
    if check:
        check_variety(X)
    ring, n = X.ring, X.n
    h = X.equations[0]
    grad = h.gradient()
    gens = [_euler_field(ring, X.weights)]
    zero = ring.zero()
    for i in range(n):
        for j in range(i + 1, n):
            ent = [zero] * n
            ent[i] = grad[j]
            ent[j] = -grad[i]
            gens.append(VecPoly(ent, ring))
    return DerlogModule(SubModule(ring, n, gens), "thm2_6", X)


def cofactor_fields(hs: Sequence[Poly]) -> list:
    """Vector fields from the (p+1)-minors of [d/dx ; Dh], expanded along the symbol row."""
    hs = list(hs)
    ring = hs[0].ring
    n, p = ring.n, len(hs)
    D = jacobian(hs)
    out = []
    zero = ring.zero()
    for cols in combinations(range(n), p + 1):
        ent = [zero] * n
        for k, j in enumerate(cols):
            rest = [c for c in cols if c != j]
            cof = D.submatrix(list(range(p)), rest).det()
            ent[j] = cof if k % 2 == 0 else -cof
        out.append(VecPoly(ent, ring))
    return out


def derlog_wh_icis(X: VarietySpec, check: bool = True) -> DerlogModule:
    if check:
        if X.kind != "wh_icis":
            raise HypothesisError(f"variety kind {X.kind} is not wh_icis")
        check_variety(X)
    ring, n = X.ring, X.n
    hs = list(X.equations)
    gens = [_euler_field(ring, X.weights)]
    for h in hs:
        for j in range(n):
            gens.append(VecPoly.unit(ring, n, j, h))
    gens.extend(cofactor_fields(hs))
    return DerlogModule(SubModule(ring, n, gens), "thm2_5", X)


def derlog_builtin(X: VarietySpec) -> DerlogModule:
    ring, n = X.ring, X.n
    xs = ring.gens()
    if X.kind == "ambient":
        gens = [VecPoly.unit(ring, n, j) for j in range(n)]
    elif X.kind == "origin":
        gens = [VecPoly.unit(ring, n, j, x) for j in range(n) for x in xs]
    elif X.kind == "linear_subspace":
        K = _coordinate_indices(X)
        if K is None:
            raise HypothesisError("linear_subspace equations must be distinct coordinate variables")
        gens = [VecPoly.unit(ring, n, j) for j in range(n) if j not in K]
        gens += [VecPoly.unit(ring, n, j, xs[k]) for j in K for k in K]
    else:
        raise HypothesisError(f"no built-in module for kind {X.kind}")
    return DerlogModule(SubModule(ring, n, gens), "builtin", X)


def derlog(X: VarietySpec, assume_reduced: bool = False) -> DerlogModule:
    """Dispatch on the variety kind."""
    if X.kind in ("ambient", "origin", "linear_subspace"):
        return derlog_builtin(X)
    if X.kind == "wh_hypersurface":
        return derlog_wh_hypersurface(X)
    if X.kind == "wh_icis":
        return derlog_wh_icis(X)
    return derlog_syzygy(X, assume_reduced)


def classify_hypersurface(h: Poly, weights=None) -> VarietySpec:
    """Variety of a single equation, taking the reduced equation and re-deriving the kind."""
    ring = h.ring
    if h.is_zero():
        return ambient(ring)
    if h.eval_at_origin() != 0:
        raise HypothesisError("equation does not vanish at the origin (empty germ)")
    r = reduced_equation(h)
    if ring.n == 1:
        return origin(ring)
    w = tuple(weights) if weights is not None else ring.w
    if _coordinate_indices(VarietySpec(ring, (r,))) is not None:
        return VarietySpec(ring, (r,), None, "linear_subspace")
    if is_weighted_homogeneous(r, w) and is_isolated_singularity(r):
        return VarietySpec(ring, (r,), w, "wh_hypersurface")
    return VarietySpec(ring, (r,), w, "general", reduced=True)


def is_free_divisor(X: VarietySpec):
    """Saito's criterion; returns (flag, determinant of a minimal generating set or None)."""
    if len(X.equations) != 1:
        raise HypothesisError("free divisor test needs a hypersurface")
    h = X.equations[0]
    if not is_reduced_at_origin(h):
        raise ReducednessError(f"<{h}> is not reduced")
    D = derlog(X)
    mins = D.minimal()
    n = X.n
    if len(mins.generators) != n:
        return False, None
    det = PolyMatrix.from_columns([g.entries for g in mins.generators]).det()
    if det.is_zero():
        return False, det
    same = module_equal(SubModule.ideal([det], X.ring), SubModule.ideal([h], X.ring))
    return same.value == "equal", det
