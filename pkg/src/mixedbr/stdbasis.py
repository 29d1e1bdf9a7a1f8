"""Standard bases for local orderings (Mora's tangent cone algorithm).

Submodules of O^m (ideals are the case m = 1) are represented by polynomial
generators; all computations happen in the localization of the polynomial ring
at the origin, which is faithfully flat under the convergent power series ring,
so colengths, syzygies, quotients and membership agree with O_n.

Internally a module element is a ``dict`` mapping ``(component, exponent)`` to a
nonzero ``mpq``.  The module ordering is position-over-term: a smaller component
index is a larger term, then the ring's local (negative weighted degree)
ordering.  Reduction is Mora's normal form with ecart-based reducer selection.

By default a basis is computed by Lazard's method: inputs are homogenized with
an extra variable t, a Groebner basis is built for a global order that prefers
higher powers of t, and t is then set to 1.  All elements stay homogeneous, so
reduction never climbs in degree; plain Mora reduction on non-zero-dimensional
inputs can, and then spends most of its time in tails of ever higher degree.
Membership tests still use Mora's normal form against the finished basis.

For ideals whose leading ideal becomes zero-dimensional during the computation,
all monomials of weighted degree at least the "Noether bound" lie in the ideal;
from then on such terms are discarded everywhere.
"""

from __future__ import annotations

import contextvars
import heapq
import itertools
from contextlib import contextmanager
from dataclasses import dataclass, replace
from enum import Enum
from operator import add, sub
from typing import Sequence

from gmpy2 import mpq

from .poly import Poly, PolyMatrix, RingSpec, VecPoly


class ResourceLimitError(RuntimeError):
    """A standard-basis computation exceeded the configured degree or size guard."""


@dataclass(frozen=True)
class Limits:
    max_degree: int = 64
    max_basis: int = 5000
    staircase_cap: int = 100000


_LIMITS = contextvars.ContextVar("mixedbr_limits", default=Limits())


def current_limits() -> Limits:
    return _LIMITS.get()


@contextmanager
def resource_limits(**changes):
    token = _LIMITS.set(replace(_LIMITS.get(), **changes))
    try:
        yield _LIMITS.get()
    finally:
        _LIMITS.reset(token)


class _Infinite:
    """The value ``infinite`` for colengths and power indices."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "infinite"

    __str__ = __repr__

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("infinite")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True


INFINITE = _Infinite()


# ----------------------------------------------------------------------
# orderings

class _Order:
    def __init__(self, ring: RingSpec):
        self.n = ring.n
        self.w = ring.w
        self.revlex = ring.ordering == "negdegrevlex"
        self._key: dict = {}
        self._wd: dict = {}

    def wdeg(self, e) -> int:
        d = self._wd.get(e)
        if d is None:
            d = sum(a * b for a, b in zip(e, self.w))
            self._wd[e] = d
        return d

    def key(self, t):
        k = self._key.get(t)
        if k is None:
            c, e = t
            if self.revlex:
                k = (-c, -self.wdeg(e)) + tuple(-a for a in reversed(e))
            else:
                k = (-c, -self.wdeg(e)) + e
            self._key[t] = k
        return k


class _HomOrder:
    """Global order on x^e t^a used by Lazard's method.

    Higher total degree first, then the larger power of t (that is, the lower
    weighted degree of the x-part), then the local tie-break on x.  Setting t = 1
    in a Groebner basis for this order gives a standard basis for the local one.
    """

    def __init__(self, base: _Order):
        self.base = base
        self.n = base.n + 1
        self.w = tuple(base.w) + (1,)
        self._key: dict = {}

    def wdeg(self, E) -> int:
        return self.base.wdeg(E[:-1]) + E[-1]

    def key(self, t):
        k = self._key.get(t)
        if k is None:
            c, E = t
            bk = self.base.key((c, E[:-1]))
            k = (bk[0], self.wdeg(E), E[-1]) + bk[2:]
            self._key[t] = k
        return k


_ORDERS: dict = {}


def _order_for(ring: RingSpec) -> _Order:
    o = _ORDERS.get(ring)
    if o is None:
        o = _ORDERS[ring] = _Order(ring)
    return o


def _divides(a, b) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


class _Elem:
    __slots__ = ("p", "lm", "lc", "lmw", "deg", "ecart", "tdeg")

    def copy(self) -> "_Elem":
        e = _Elem()
        e.p = dict(self.p)
        e.lm, e.lc, e.lmw, e.deg, e.ecart, e.tdeg = (
            self.lm, self.lc, self.lmw, self.deg, self.ecart, self.tdeg)
        return e


class _Engine:
    """Mora standard basis computation for one ring and rank."""

    def __init__(self, ring: RingSpec, rank: int, use_criteria: bool = True, homogenize: bool = True):
        self.ring = ring
        self.rank = rank
        self.hom = homogenize
        self.xorder = _order_for(ring)
        self.order = _HomOrder(self.xorder) if homogenize else self.xorder
        self.limits = current_limits()
        self.noether = None  # rank-1 only: every monomial of weighted degree >= noether is in the ideal
        self.use_criteria = use_criteria
        self.unit = False

    # -- element bookkeeping --------------------------------------------
    def xdeg(self, e) -> int:
        """Weighted degree of the x-part of an exponent."""
        return self.xorder.wdeg(e[:-1] if self.hom else e)

    def xpart(self, e):
        return e[:-1] if self.hom else e

    def make(self, p: dict) -> _Elem | None:
        if self.noether is not None:
            N = self.noether
            wd = self.xdeg
            p = {t: c for t, c in p.items() if wd(t[1]) < N}
        if not p:
            return None
        e = _Elem()
        e.p = p
        self.refresh(e)
        return e

    def refresh(self, e: _Elem) -> None:
        key = self.order.key
        wd = self.order.wdeg
        lm = max(e.p, key=key)
        e.lm = lm
        e.lc = e.p[lm]
        e.lmw = wd(lm[1])
        e.deg = max(wd(t[1]) for t in e.p)
        e.ecart = e.deg - e.lmw
        e.tdeg = max(sum(t[1]) for t in e.p)
        if e.tdeg > self.limits.max_degree:
            raise ResourceLimitError(
                f"total degree {e.tdeg} exceeds max_degree={self.limits.max_degree}")

    def _sub_multiple(self, h: dict, c, shift, g: _Elem) -> None:
        """h -= c * x^shift * g, in place, honouring the Noether bound."""
        N = self.noether
        wd = self.xdeg
        sw = wd(shift)
        if sum(shift) + g.tdeg > self.limits.max_degree:
            raise ResourceLimitError(
                f"reduction would exceed max_degree={self.limits.max_degree}")
        for (gc, ge), gv in g.p.items():
            if N is not None and sw + wd(ge) >= N:
                continue
            t = (gc, tuple(map(add, shift, ge)))
            v = h.get(t)
            if v is None:
                h[t] = -c * gv
            else:
                v = v - c * gv
                if v:
                    h[t] = v
                else:
                    del h[t]

    def truncate(self, e: _Elem) -> bool:
        """Drop terms beyond the Noether bound; False if the element vanished."""
        N = self.noether
        wd = self.xdeg
        if wd(e.lm[1]) >= N:
            return False
        if any(wd(t[1]) >= N for t in e.p):
            e.p = {t: c for t, c in e.p.items() if wd(t[1]) < N}
            self.refresh(e)
        return True

    # -- Mora normal form -------------------------------------------------
    def nf(self, h: _Elem | None, T0: Sequence[_Elem]) -> _Elem | None:
        """Weak normal form: u*h - result lies in the module for a unit u."""
        if h is None:
            return None
        T = list(T0)
        while True:
            hc, he = h.lm
            best = None
            for g in T:
                gc, ge = g.lm
                if gc == hc and _divides(ge, he):
                    if best is None or g.ecart < best.ecart:
                        best = g
                        if g.ecart == 0:
                            break
            if best is None:
                return h
            if best.ecart > h.ecart:
                T.append(h.copy())
            shift = tuple(map(sub, he, best.lm[1]))
            self._sub_multiple(h.p, h.lc / best.lc, shift, best)
            if self.noether is not None and h.p:
                N = self.noether
                wd = self.xdeg
                if any(wd(t[1]) >= N for t in h.p):
                    h.p = {t: c for t, c in h.p.items() if wd(t[1]) < N}
            if not h.p:
                return None
            self.refresh(h)

    def spoly(self, f: _Elem, g: _Elem) -> _Elem | None:
        lcm = tuple(map(max, f.lm[1], g.lm[1]))
        sf = tuple(map(sub, lcm, f.lm[1]))
        sg = tuple(map(sub, lcm, g.lm[1]))
        h: dict = {}
        self._sub_multiple(h, -1 / f.lc, sf, f)
        self._sub_multiple(h, 1 / g.lc, sg, g)
        return self.make(h) if h else None

    # -- Noether bound --------------------------------------------------
    def _update_noether(self, S) -> bool:
        n = self.ring.n
        leads = [self.xpart(e.lm[1]) for e in S if e is not None]
        pure = set()
        for e in leads:
            nz = [i for i, a in enumerate(e) if a]
            if len(nz) == 1:
                pure.add(nz[0])
            elif not nz:
                self.unit = True
                self.noether = 0
                return True
        if len(pure) < n and self.noether is None:
            return False
        stairs = staircase(leads, n, self.limits.staircase_cap, self.xorder.w, self.noether)
        wd = self.xorder.wdeg
        N = max(wd(e) for e in stairs) + 1 if stairs else 0
        if self.noether is None or N < self.noether:
            self.noether = N
            return True
        return False

    # -- Buchberger loop with Mora reduction --------------------------------
    def std(self, gens: Sequence[dict]) -> list:
        S: list = []
        heap: list = []
        counter = itertools.count()
        key = self.xorder.key

        for p in gens:
            e = self.make(self._homogenize(p) if self.hom else dict(p))
            if e is not None:
                # inputs go first so that monomial generators fix the Noether bound early
                heapq.heappush(heap, (-1, e.deg, next(counter), "gen", e))

        def lcm_of(i, j):
            return tuple(map(max, S[i].lm[1], S[j].lm[1]))

        def add_element(h: _Elem):
            k = len(S)
            S.append(h)
            if len(S) > self.limits.max_basis:
                raise ResourceLimitError(f"standard basis exceeds max_basis={self.limits.max_basis}")
            hc, he = h.lm
            # chain criterion on queued pairs
            if self.use_criteria:
                for item in heap:
                    if item[3] != "pair":
                        continue
                    rec = item[4]
                    if not rec[3]:
                        continue
                    i, j, l = rec[0], rec[1], rec[2]
                    if S[i] is None or S[j] is None:
                        rec[3] = False
                        continue
                    if S[i].lm[0] != hc or not _divides(he, l):
                        continue
                    if tuple(map(max, S[i].lm[1], he)) != l and tuple(map(max, S[j].lm[1], he)) != l:
                        rec[3] = False
            new = []
            for i in range(k):
                s = S[i]
                if s is None or s.lm[0] != hc:
                    continue
                new.append((i, tuple(map(max, s.lm[1], he))))
            if self.use_criteria and new:
                # Gebauer-Moeller: drop pairs whose lcm is a proper multiple of another new lcm
                keep = []
                for i, l in new:
                    if any(l2 != l and _divides(l2, l) for _, l2 in new):
                        continue
                    keep.append((i, l))
                groups: dict = {}
                for i, l in keep:
                    groups.setdefault(l, []).append(i)
                new = []
                for l, idx in groups.items():
                    coprime = self.rank == 1 and any(
                        all(a == 0 or b == 0 for a, b in zip(S[i].lm[1], he)) for i in idx)
                    if coprime:
                        continue
                    new.append((idx[0], l))
            for i, l in new:
                sugar = self.order.wdeg(l) + max(S[i].ecart, h.ecart)
                rec = [i, k, l, True]
                heapq.heappush(heap, (sugar, self.order.wdeg(l), next(counter), "pair", rec))
            if self.rank == 1 and self._update_noether(S):
                if self.unit:
                    return
                for idx, s in enumerate(S):
                    if s is not None and not self.truncate(s):
                        S[idx] = None

        while heap:
            _, _, _, kind, data = heapq.heappop(heap)
            if kind == "gen":
                h = data
                if self.noether is not None and not self.truncate(h):
                    continue
            else:
                i, j, l, alive = data
                if not alive or S[i] is None or S[j] is None:
                    continue
                if self.noether is not None and self.xdeg(l) >= self.noether:
                    continue
                h = self.spoly(S[i], S[j])
            h = self.nf(h, [s for s in S if s is not None])
            if h is not None:
                add_element(h)
                if self.unit:
                    one = _Elem()
                    one.p = {(0, (0,) * self.ring.n): mpq(1)}
                    _Engine(self.ring, self.rank, homogenize=False).refresh(one)
                    return [one]
        alive = [s for s in S if s is not None]
        if self.hom:
            alive = [self._dehomogenize(e) for e in alive]
        if self.noether:
            alive.extend(self._border_monomials(alive))
        # keep elements whose leading term is minimal
        alive.sort(key=lambda e: (key(e.lm), -e.ecart), reverse=True)
        out = []
        for e in alive:
            if any(f.lm[0] == e.lm[0] and _divides(f.lm[1], e.lm[1]) for f in out):
                continue
            out.append(e)
        return out


    def _homogenize(self, p: dict) -> dict:
        wd = self.xorder.wdeg
        D = max(wd(e) for _, e in p)
        return {(c, e + (D - wd(e),)): a for (c, e), a in p.items()}

    def _dehomogenize(self, e: _Elem) -> _Elem:
        """Set t = 1; a homogeneous element has no two terms with the same x-part."""
        out = _Elem()
        out.p = {(c, E[:-1]): a for (c, E), a in e.p.items()}
        _Engine(self.ring, self.rank, homogenize=False).refresh(out)
        return out

    def _border_monomials(self, alive) -> list:
        """Minimal monomials of weighted degree >= noether not already leading terms (plain form)."""
        n, N = self.ring.n, self.noether
        plain = _Engine(self.ring, self.rank, homogenize=False)
        leads = [e.lm[1] for e in alive]
        out = []
        stack = [((0,) * n, 0)]
        while stack:
            e, start = stack.pop()
            if any(_divides(g, e) for g in leads):
                continue
            if self.xorder.wdeg(e) >= N:
                m = _Elem()
                m.p = {(0, e): mpq(1)}
                plain.refresh(m)
                out.append(m)
                continue
            for i in range(start, n):
                stack.append((e[:i] + (e[i] + 1,) + e[i + 1:], i))
        return out


def staircase(leads, n: int, cap: int = 100000, w=None, bound=None) -> list:
    """Monomials outside the monomial ideal generated by ``leads`` (assumed zero-dimensional).

    With ``bound``, monomials of ``w``-degree >= bound also count as inside the ideal.
    """
    leads = list(leads)
    out = []
    stack = [((0,) * n, 0)]
    while stack:
        e, start = stack.pop()
        if bound is not None and sum(a * b for a, b in zip(e, w)) >= bound:
            continue
        if any(_divides(g, e) for g in leads):
            continue
        out.append(e)
        if len(out) > cap:
            raise ResourceLimitError(f"staircase larger than cap={cap}")
        for i in range(start, n):
            ne = e[:i] + (e[i] + 1,) + e[i + 1:]
            stack.append((ne, i))
    return out


def monomial_krull_dim(leads, n: int) -> int:
    """Dimension of K[x]/(monomial ideal): largest variable set avoided by every generator support."""
    supports = [frozenset(i for i, a in enumerate(e) if a) for e in leads]
    if any(not s for s in supports):
        return -1
    for size in range(n, -1, -1):
        for S in itertools.combinations(range(n), size):
            S = frozenset(S)
            if not any(s <= S for s in supports):
                return size
    return 0


# ----------------------------------------------------------------------
# public types

def _vec_to_dict(v: VecPoly) -> dict:
    out = {}
    for c, p in enumerate(v.entries):
        for e, a in p.terms.items():
            out[(c, e)] = a
    return out


def _dict_to_vec(d: dict, ring: RingSpec, rank: int) -> VecPoly:
    comps: list = [dict() for _ in range(rank)]
    for (c, e), a in d.items():
        comps[c][e] = a
    return VecPoly([Poly(ring, t, _clean=True) for t in comps], ring)


class _StdState:
    """Result of a standard basis run: reduced leading data plus the Noether bound."""

    def __init__(self, ring, rank, elems, noether):
        self.ring = ring
        self.rank = rank
        self.elems = elems
        self.noether = noether

    def leads(self, comp=None) -> list:
        return [e.lm[1] for e in self.elems if comp is None or e.lm[0] == comp]

    def engine(self) -> _Engine:
        eng = _Engine(self.ring, self.rank, homogenize=False)
        eng.noether = self.noether
        return eng


class SubModule:
    """Finitely generated submodule of O^rank (an ideal when rank == 1)."""

    def __init__(self, ring: RingSpec, rank: int, generators: Sequence[VecPoly] = ()):
        gens = []
        for g in generators:
            if isinstance(g, Poly):
                g = VecPoly([g], ring)
            if g.ring != ring:
                raise ValueError("generator from a different ring")
            if g.rank != rank:
                raise ValueError(f"generator of rank {g.rank} in a rank-{rank} module")
            gens.append(g)
        self.ring = ring
        self.rank = rank
        self.generators = tuple(gens)
        self._std: _StdState | None = None

    @classmethod
    def ideal(cls, polys: Sequence[Poly], ring: RingSpec | None = None) -> "SubModule":
        polys = list(polys)
        if ring is None:
            if not polys:
                raise ValueError("empty ideal needs an explicit ring")
            ring = polys[0].ring
        return cls(ring, 1, [VecPoly([p], ring) for p in polys])

    @classmethod
    def free(cls, ring: RingSpec, rank: int) -> "SubModule":
        return cls(ring, rank, [VecPoly.unit(ring, rank, j) for j in range(rank)])

    @property
    def cached_std(self) -> _StdState | None:
        return self._std

    def polys(self) -> list:
        if self.rank != 1:
            raise ValueError("not an ideal")
        return [g.entries[0] for g in self.generators]

    def nonzero(self) -> "SubModule":
        return SubModule(self.ring, self.rank, [g for g in self.generators if not g.is_zero()])

    def __add__(self, other: "SubModule") -> "SubModule":
        if other.rank != self.rank or other.ring != self.ring:
            raise ValueError("incompatible modules")
        return SubModule(self.ring, self.rank, self.generators + other.generators)

    def __len__(self):
        return len(self.generators)

    def __repr__(self):
        kind = "Ideal" if self.rank == 1 else f"SubModule(rank={self.rank})"
        body = ", ".join(str(g.entries[0]) if self.rank == 1 else str(g) for g in self.generators)
        return f"{kind}<{body}>"


def _std_state(M: SubModule) -> _StdState:
    if M._std is None:
        eng = _Engine(M.ring, M.rank)
        elems = eng.std([_vec_to_dict(g) for g in M.generators if not g.is_zero()])
        M._std = _StdState(M.ring, M.rank, elems, eng.noether)
    return M._std


def std_basis(M: SubModule) -> SubModule:
    """Standard basis of M w.r.t. the ring's local ordering (position over term)."""
    st = _std_state(M)
    out = SubModule(M.ring, M.rank, [_dict_to_vec(e.p, M.ring, M.rank) for e in st.elems])
    out._std = st
    return out


def _as_vec(v, M: SubModule) -> VecPoly:
    if isinstance(v, Poly):
        v = VecPoly([v], M.ring)
    if v.rank != M.rank or v.ring != M.ring:
        raise ValueError("element incompatible with the module")
    return v


def normal_form(v, M: SubModule) -> VecPoly:
    """Weak Mora normal form of v modulo M; zero exactly when v lies in M."""
    v = _as_vec(v, M)
    st = _std_state(M)
    eng = st.engine()
    h = eng.nf(eng.make(_vec_to_dict(v)), st.elems)
    if h is None:
        return VecPoly([M.ring.zero()] * M.rank, M.ring)
    return _dict_to_vec(h.p, M.ring, M.rank)


def contains(M: SubModule, v) -> bool:
    return normal_form(v, M).is_zero()


@dataclass(frozen=True)
class ColengthResult:
    finite: bool
    value: int | None = None
    standard_monomials: tuple | None = None

    def __post_init__(self):
        if self.finite != (self.value is not None):
            raise ValueError("value must be present exactly when finite")

    def as_value(self):
        return self.value if self.finite else INFINITE

    def __int__(self):
        if not self.finite:
            raise ValueError("colength is infinite")
        return self.value

    def __repr__(self):
        return f"ColengthResult({self.value if self.finite else 'infinite'})"


def colength(M: SubModule, keep_monomials: int = 2000) -> ColengthResult:
    """dim_C O^m / M via per-component staircases of the leading module."""
    st = _std_state(M)
    n = M.ring.n
    total = 0
    monos = None
    for c in range(M.rank):
        leads = st.leads(c)
        if st.noether is not None:
            # the implicit generators: monomials of weighted degree >= noether
            if st.noether == 0:
                leads = [(0,) * n]
            else:
                stairs = staircase(leads, n, current_limits().staircase_cap, M.ring.w, st.noether)
                total += len(stairs)
                if M.rank == 1:
                    monos = stairs
                continue
        covered = set()
        for e in leads:
            nz = [i for i, a in enumerate(e) if a]
            if not nz:
                covered = set(range(n))
                break
            if len(nz) == 1:
                covered.add(nz[0])
        if len(covered) < n:
            return ColengthResult(False)
        stairs = staircase(leads, n, current_limits().staircase_cap)
        total += len(stairs)
        if M.rank == 1:
            monos = stairs
    sm = None
    if M.rank == 1 and monos is not None and len(monos) <= keep_monomials:
        sm = tuple(sorted(monos, key=lambda e: (sum(e), e)))
    return ColengthResult(True, total, sm)


def krull_dim(I: SubModule) -> int:
    """dim O_n/I from the leading ideal (I a proper ideal)."""
    if I.rank != 1:
        raise ValueError("krull_dim is defined here for ideals")
    st = _std_state(I)
    if st.noether == 0:
        raise ValueError("unit ideal has no dimension")
    if st.noether is not None:
        return 0
    d = monomial_krull_dim(st.leads(0), I.ring.n)
    if d < 0:
        raise ValueError("unit ideal has no dimension")
    return d


def is_unit_ideal(I: SubModule) -> bool:
    st = _std_state(I)
    return any(not any(e.lm[1]) for e in st.elems) or st.noether == 0


def syzygies(M: SubModule) -> SubModule:
    """Generators of {g : sum g_k u_k = 0} for the generators u_k of M."""
    ring, m = M.ring, M.rank
    s = len(M.generators)
    if s == 0:
        raise ValueError("syzygies of an empty generating set")
    gens = []
    for k, u in enumerate(M.generators):
        d = _vec_to_dict(u)
        d[(m + k, (0,) * ring.n)] = mpq(1)
        gens.append(d)
    eng = _Engine(ring, m + s)
    elems = eng.std(gens)
    out = []
    for e in elems:
        if e.lm[0] >= m:
            shifted = {(c - m, ex): a for (c, ex), a in e.p.items()}
            out.append(_dict_to_vec(shifted, ring, s))
    return SubModule(ring, s, out)


def ideal_quotient(I: SubModule, f: Poly) -> SubModule:
    """The ideal (I : f) = {g : g f in I}."""
    ring = I.ring
    if f.is_zero():
        return SubModule.ideal([ring.one()], ring)
    gens = [f] + [p for p in I.polys() if p]
    if len(gens) == 1:
        return SubModule.ideal([], ring)
    syz = syzygies(SubModule.ideal(gens, ring))
    return SubModule.ideal([v.entries[0] for v in syz.generators if v.entries[0]], ring)


def power_index(f: Poly, I: SubModule, cap: int | None = None):
    """Least r >= 1 with f^r in I, or INFINITE."""
    ring = I.ring
    cl = colength(I)
    if cl.finite:
        if cl.value == 0:
            return 1
        if f.eval_at_origin() != 0:
            return INFINITE
        bound = cl.value + 1
    else:
        if cap is None:
            raise ValueError("I has infinite colength: pass an explicit cap")
        bound = cap
    st = _std_state(I)
    eng = st.engine()
    g = ring.one()
    for r in range(1, bound + 1):
        g = g * f
        h = eng.nf(eng.make(_vec_to_dict(VecPoly([g], ring))), st.elems)
        if h is None:
            return r
        # u*g - h lies in I for a unit u, so continue from h
        g = _dict_to_vec(h.p, ring, 1).entries[0]
    return INFINITE


def module_preimage(A: PolyMatrix, T: SubModule) -> SubModule:
    """{g in O^cols : A g in T} for a matrix A with T's rank as row count."""
    if A.rows != T.rank:
        raise ValueError("matrix row count must equal the module rank")
    ring = T.ring
    cols = A.columns()
    gens = cols + [g for g in T.generators if not g.is_zero()]
    syz = syzygies(SubModule(ring, T.rank, gens))
    out = []
    for v in syz.generators:
        g = VecPoly(v.entries[:A.cols], ring)
        if not g.is_zero():
            out.append(g)
    return SubModule(ring, A.cols, out)


class Relation(str, Enum):
    EQUAL = "equal"
    STRICT_SUBSET = "strict_subset"
    STRICT_SUPERSET = "strict_superset"
    INCOMPARABLE = "incomparable"


def is_submodule(M1: SubModule, M2: SubModule) -> bool:
    return all(contains(M2, g) for g in M1.generators)


def module_equal(M1: SubModule, M2: SubModule) -> Relation:
    if M1.rank != M2.rank or M1.ring != M2.ring:
        raise ValueError("modules of different rank or ring")
    a = is_submodule(M1, M2)
    b = is_submodule(M2, M1)
    if a and b:
        return Relation.EQUAL
    if a:
        return Relation.STRICT_SUBSET
    if b:
        return Relation.STRICT_SUPERSET
    return Relation.INCOMPARABLE


def max_ideal_times(M: SubModule) -> SubModule:
    ring = M.ring
    xs = ring.gens()
    return SubModule(ring, M.rank, [g.scale(x) for g in M.generators for x in xs])


def minimal_generators(M: SubModule) -> SubModule:
    """Drop generators lying in (other generators) + m*M until none can be dropped."""
    gens = [g for g in M.generators if not g.is_zero()]
    mM = max_ideal_times(M)
    i = 0
    while i < len(gens):
        others = gens[:i] + gens[i + 1:]
        test = SubModule(M.ring, M.rank, others) + mM
        if contains(test, gens[i]):
            gens = others
        else:
            i += 1
    return SubModule(M.ring, M.rank, gens)
