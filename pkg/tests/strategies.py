"""Hypothesis strategies for small polynomials."""

from hypothesis import strategies as st

from mixedbr.poly import Poly, RingSpec

R2 = RingSpec(("x", "y"))
R3 = RingSpec(("x", "y", "z"))


def exps(n, max_deg):
    return st.lists(st.integers(0, max_deg), min_size=n, max_size=n).filter(lambda e: 0 < sum(e) <= max_deg)


@st.composite
def polys(draw, ring=R2, max_deg=4, max_terms=4, vanish=True):
    terms = draw(st.dictionaries(exps(ring.n, max_deg).map(tuple), st.integers(-9, 9).filter(bool),
                                 min_size=1, max_size=max_terms))
    if not vanish and draw(st.booleans()):
        terms[(0,) * ring.n] = draw(st.integers(-5, 5))
    return Poly(ring, terms)


@st.composite
def isolated_polys(draw, ring=R2, max_deg=4):
    """Pure powers plus a random perturbation of higher degree: always finite Milnor number."""
    degs = draw(st.lists(st.integers(2, max_deg), min_size=ring.n, max_size=ring.n))
    f = ring.zero()
    for j, d in enumerate(degs):
        f = f + ring.monomial(tuple(d if k == j else 0 for k in range(ring.n)))
    extra = draw(polys(ring, max_deg=max(degs) + 2, max_terms=2))
    high = Poly(ring, {e: c for e, c in extra.terms.items() if sum(e) > max(degs)})
    return f + high
