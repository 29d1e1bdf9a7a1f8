"""Seeded random instances for the identity suites."""

from __future__ import annotations

import random
from itertools import combinations_with_replacement

from mixedbr.derlog import VarietySpec, is_icis, is_isolated_singularity
from mixedbr.poly import RingSpec

VARS = ("x", "y", "z", "t")


def ring_n(n: int, weights=None) -> RingSpec:
    return RingSpec(VARS[:n], weights)


def exponents(n: int, d: int):
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for j in combo:
            e[j] += 1
        yield tuple(e)


def coeff(rng: random.Random, height: int = 5) -> int:
    while True:
        c = rng.randint(-height, height)
        if c:
            return c


def homogeneous(ring: RingSpec, d: int, rng: random.Random, extra: int = 2):
    """Fermat-type form of degree d plus a few random monomials of degree d."""
    f = ring.zero()
    for j in range(ring.n):
        f = f + ring.monomial(tuple(d if k == j else 0 for k in range(ring.n))) * coeff(rng)
    pool = list(exponents(ring.n, d))
    for e in rng.sample(pool, min(extra, len(pool))):
        f = f + ring.monomial(e) * coeff(rng)
    return f


def isolated_homogeneous(ring: RingSpec, d: int, rng: random.Random, extra: int = 2):
    while True:
        h = homogeneous(ring, d, rng, extra)
        if is_isolated_singularity(h):
            return h


def germ(ring: RingSpec, rng: random.Random, lo: int = 1, hi: int = 3, terms: int = 4):
    """Sparse polynomial vanishing at 0 with total degrees in [lo, hi]."""
    pool = [e for d in range(lo, hi + 1) for e in exponents(ring.n, d)]
    f = ring.zero()
    for e in rng.sample(pool, min(terms, len(pool))):
        f = f + ring.monomial(e) * coeff(rng)
    return f if not f.is_zero() else ring.gens()[0]


def isolated_germ(ring: RingSpec, rng: random.Random, hi: int = 4):
    """Random germ with an isolated singularity at 0 (critical point of order >= 2)."""
    from mixedbr.invariants import milnor
    while True:
        d = rng.randint(2, hi)
        f = homogeneous(ring, d, rng, extra=1) + germ(ring, rng, d + 1, d + 2, 2)
        if milnor(f).finite:
            return f


def wh_hypersurface(ring: RingSpec, d: int, rng: random.Random) -> VarietySpec:
    return VarietySpec(ring, (isolated_homogeneous(ring, d, rng),), None, "wh_hypersurface")


def homogeneous_icis(ring: RingSpec, degrees, rng: random.Random) -> VarietySpec:
    while True:
        hs = tuple(homogeneous(ring, d, rng, 2) for d in degrees)
        if is_icis(list(hs)):
            return VarietySpec(ring, hs, None, "wh_icis" if len(hs) > 1 else "wh_hypersurface")


def linear_arrangement(ring: RingSpec, k: int, rng: random.Random) -> VarietySpec:
    """Product of k pairwise independent random linear forms: a reduced homogeneous hypersurface."""
    forms = []
    while len(forms) < k:
        l = sum((x * coeff(rng) for x in ring.gens()), ring.zero())
        if not any(_proportional(l, m) for m in forms):
            forms.append(l)
    h = ring.one()
    for l in forms:
        h = h * l
    return VarietySpec(ring, (h,), None, "general")


def _proportional(a, b) -> bool:
    if set(a.terms) != set(b.terms):
        return False
    ratios = {a.terms[e] / b.terms[e] for e in a.terms}
    return len(ratios) == 1
