import random

import pytest
from hypothesis import given, settings, strategies as st

from mixedbr.config import SamplingConfig
from mixedbr.derlog import VarietySpec, ambient, derlog
from mixedbr.errors import HypothesisError
from mixedbr.invariants import (c_fh, jx_ideal, milnor, milnor_icis, milnor_icis_detail, milnor_icis_qraro,
                                milnor_swh, mu_X, mudeh_check, ord, principal_part, r_certificate, tau_X,
                                teissier_e_i)
from mixedbr.poly import RingSpec, euler_apply, jacobian_minors
from mixedbr.stdbasis import INFINITE, SubModule, colength

from corpus import GERM4, R2, R3, R4, crossings3, weighted_plane_curve
from generators import germ, isolated_homogeneous, ring_n, wh_hypersurface
from oracles import macaulay_colength

FERMAT3 = "x^3 + y^3 + z^3"


def test_milnor_examples():
    assert milnor(R3(FERMAT3)).value == 8
    assert milnor(R4(GERM4)).value == 60
    assert milnor(R2("x^2 + y^2")).value == 1
    assert not milnor(R2("x^2")).finite


def test_bruce_roberts_on_normal_crossings():
    D = derlog(crossings3())
    assert mu_X(R3(FERMAT3), D).value == 27
    assert mu_X(R3("x*y + x*z + y*z"), D).as_value() is INFINITE
    assert mu_X(R3("x + y + z"), D).value == 1


def test_tau_examples():
    X = weighted_plane_curve()
    f = X.ring("x + y")
    D = derlog(X)
    assert mu_X(f, D).value == 6
    assert tau_X(f, D).value == 1
    # f lies in <x^3, y^3, z^3> = J_X(f), so tau_X = mu_X here
    Dc = derlog(crossings3())
    assert tau_X(R3(FERMAT3), Dc).value == 27
    assert macaulay_colength(jx_ideal(R3(FERMAT3), Dc).polys() + [R3(FERMAT3)], 3) == 27
    g = R2("x^3 + y^4")
    assert tau_X(g, derlog(ambient(R2))).value == milnor(g).value


def test_c_fh():
    f, h = R3(FERMAT3), R3("x*y*z")
    # xyz is not isolated, so <h> + J(f,h) has infinite colength
    assert not c_fh(f, [h]).finite
    # with f in the first slot the same minors give mu(f) + mu(f,h)
    lg = colength(SubModule.ideal([f] + jacobian_minors([f, h]), R3))
    assert lg.value == 36 == macaulay_colength([f] + jacobian_minors([f, h]), 3)
    # Morse f and a hyperplane h: <h> + J(f,h) gives mu(h) + mu(h,f) = 0 + 1,
    # while <f> + J(f,h) gives mu(f) + mu(f,h) = 1 + 1
    f2, l2 = R2("x^2 + y^2"), R2("x + 2*y")
    assert c_fh(f2, [l2]).value == 1
    assert colength(SubModule.ideal([f2] + jacobian_minors([f2, l2]), R2)).value == 2
    q, l = R3("x^2 + y^2 + z^2"), R3("x + y + z")
    assert c_fh(l, [q]).value == milnor(q).value + milnor_icis([q, l]).value


def test_milnor_icis():
    assert milnor_icis([R3("x^2 + y^2 + z^2")]).value == 1
    assert milnor_icis([R3(FERMAT3), R3("x*y*z")]).value == 28
    assert milnor_icis([R2("x"), R2("y")]).value == 0
    with pytest.raises(HypothesisError):
        milnor_icis([R3("x*y"), R3("x*z")])


def test_icis_chain_is_deterministic_in_the_seed():
    gs = [R3(FERMAT3), R3("x*y*z")]
    a = milnor_icis_detail(gs, SamplingConfig(seed=3))
    b = milnor_icis_detail(gs, SamplingConfig(seed=3))
    assert a.chain == b.chain and a.value.value == b.value.value


def test_qraro_matches_le_greuel():
    q = R3("x^2 + y^2 + z^2")
    assert milnor_icis_qraro(R3(FERMAT3), [q]).value == milnor_icis([R3(FERMAT3), q]).value == 13
    assert milnor_icis_qraro(R3("x + 2*y + 3*z"), [q]).value == 1
    X = weighted_plane_curve()
    assert milnor_icis_qraro(X.ring("x + y"), list(X.equations), (2, 3)).value == 6
    with pytest.raises(HypothesisError):
        milnor_icis_qraro(R3("x*y + x*z + y*z"), [R3("x*y*z")])


def test_semi_weighted_homogeneous():
    Rw = RingSpec(("x", "y"), (3, 2))
    assert milnor_swh([Rw("x^2 + y^3")], (3, 2)).value == 2
    assert milnor_swh([Rw("x^2 + y^3 + y^4")], (3, 2)).value == 2 == milnor(Rw("x^2 + y^3 + y^4")).value
    hs = [R3(FERMAT3), R3("x*y*z + x^4")]
    assert principal_part(hs[1], (1, 1, 1)) == R3("x*y*z")
    assert milnor_swh(hs, (1, 1, 1)).value == milnor_icis(hs).value
    with pytest.raises(HypothesisError):
        milnor_swh([R2("x^2 + x*y^2")], (1, 1))


def test_r_certificate():
    X = weighted_plane_curve()
    f = X.ring("x + y")
    cert = r_certificate(f, jx_ideal(f, derlog(X)))
    assert (cert.r, cert.colength_I, cert.colength_fI) == (6, 6, 1)
    assert cert.ratio_bound_holds and cert.ratio_attained and cert.equality
    I = SubModule.ideal([R2("x^3"), R2("y")], R2)
    c = r_certificate(R2("x"), I)
    assert (c.r, c.colength_I, c.colength_fI, c.ratio_attained) == (3, 3, 1, True)
    c = r_certificate(R2("x^3"), I)
    assert (c.r, c.colength_I, c.colength_fI, c.equality) == (1, 3, 3, True)
    with pytest.raises(HypothesisError):
        r_certificate(R2("x"), SubModule.ideal([R2("y")], R2))


def test_mudeh():
    X = weighted_plane_curve()
    rec = mudeh_check(X.ring("x + y"), list(X.equations), (2, 3))
    # weights (2,3), degree 20: mu(h) = (20/2 - 1)(20/3 - 1) = 51
    assert (rec.mu_h, rec.mu_fh, rec.r) == (51, 6, 17)
    assert rec.holds and not rec.equality and not rec.kernel_equality
    rec = mudeh_check(R3("x + 2*y + 3*z"), [R3("x^2 + y^2 + z^2")])
    assert (rec.mu_h, rec.mu_fh, rec.r, rec.rhs) == (1, 1, 2, 1)
    assert rec.equality and rec.kernel_equality


def test_order():
    assert ord(R2("x + y")) == 1
    assert ord(R2("x^2*y + x^5")) == 3
    with pytest.raises(ValueError):
        ord(R2.one())
    with pytest.raises(ValueError):
        ord(R2.zero())


def test_teissier_sequences():
    assert teissier_e_i(R2("x^2 + y^2")) == [2, 2]
    assert teissier_e_i(R2("x^3 + y^3")) == [3, 6]


# ---------------------------------------------------------------- properties

@settings(max_examples=20)
@given(st.integers(0, 10 ** 6), st.sampled_from([2, 3]))
def test_nus1_on_random_pairs(seed, n):
    rng = random.Random(seed)
    R = ring_n(n)
    X = wh_hypersurface(R, rng.randint(2, 3), rng)
    f = germ(R, rng, 1, 3)
    D = derlog(X)
    mx = mu_X(f, D)
    if not mx.finite:
        return
    mf = milnor(f)
    assert mf.finite
    assert mx.value == mf.value + milnor_icis([X.equations[0], f]).value


@settings(max_examples=20)
@given(st.integers(0, 10 ** 6))
def test_brucer_roberts_dominates_milnor(seed):
    rng = random.Random(seed)
    R = ring_n(rng.choice([2, 3]))
    X = wh_hypersurface(R, 3, rng)
    f = germ(R, rng, 2, 3)
    mx = mu_X(f, derlog(X))
    if mx.finite:
        assert mx.value >= milnor(f).value


@settings(max_examples=15)
@given(st.integers(0, 10 ** 6))
def test_ratio_bound_and_kernel_flag(seed):
    rng = random.Random(seed)
    R = ring_n(2)
    X = wh_hypersurface(R, rng.randint(2, 4), rng)
    f = germ(R, rng, 1, 3)
    I = jx_ideal(f, derlog(X))
    if not colength(I).finite:
        return
    cert = r_certificate(f, I)
    assert cert.ratio_bound_holds
    # the equality flag agrees with an independent membership test of both inclusions
    from mixedbr.stdbasis import normal_form
    K_ok = all(normal_form(g * f, I).is_zero() for g in (I + SubModule.ideal([f ** (cert.r - 1)], R)).polys())
    assert K_ok
    assert cert.equality == cert.ratio_attained


@settings(max_examples=15)
@given(st.integers(0, 10 ** 6))
def test_theta_w_route_bounds_mu_x(seed):
    rng = random.Random(seed)
    R = ring_n(2)
    h = isolated_homogeneous(R, rng.randint(2, 4), rng)
    f = germ(R, rng, 1, 3)
    X = VarietySpec(R, (h,), None, "wh_hypersurface")
    route = colength(SubModule.ideal([euler_apply(f)] + jacobian_minors([f, h]), R))
    mx = mu_X(f, derlog(X))
    if route.finite:
        assert mx.finite and mx.value == route.value
