import math

import numpy as np
import pytest

from semiphoton import bridge, dirac, dynamics, torus
from semiphoton.bridge import EmField

CANON = dirac.canonical_alpha_set()
NAT = torus.UnitSystem.natural()
MODEL = torus.derive_parameters(NAT, 1.0)
LAYOUT = bridge.electron_layout()


def test_stress_tensor_values():
    st = dynamics.stress_tensor(EmField([1, 0, 0], [0, 0, 0]))
    assert st.tau_00 == 0.5
    np.testing.assert_array_equal(np.diag(st.tau_pq), [-0.5, 0.5, 0.5])
    zero = dynamics.stress_tensor(EmField.zero())
    assert zero.tau_00 == 0.0
    assert np.abs(zero.tau_pq).max() == 0.0


def test_stress_tensor_consistency():
    rng = np.random.default_rng(9)
    for _ in range(100):
        f = EmField(rng.uniform(-2, 2, 3), rng.uniform(-2, 2, 3))
        st = dynamics.stress_tensor(f)
        np.testing.assert_allclose(st.tau_p0, np.cross(f.e.real, f.h.real),
                                   atol=1e-14)
        assert st.tau_00 == pytest.approx(
            4 * math.pi * bridge.energy_density(f), rel=1e-14)
        assert float(np.trace(st.tau_pq)) == pytest.approx(st.tau_00,
                                                           rel=1e-12, abs=1e-13)
        np.testing.assert_allclose(st.tau_pq, st.tau_pq.T, atol=1e-15)


def test_ring_force_values():
    zero = dynamics.lorentz_force_ring(MODEL, 0.0, "Ex_Hz")
    assert (zero.f2, zero.f0) == (0.0, 0.0)
    f = dynamics.lorentz_force_ring(MODEL, 1.0, "Ex_Hz")
    assert f.f0 == pytest.approx(1 / (2 * math.pi), rel=1e-15)
    assert f.f2 == pytest.approx(1 / (2 * math.pi), rel=1e-15)
    g = dynamics.lorentz_force_ring(MODEL, 1.0, "Ez_Hx")
    assert g.f0 == -f.f0 and g.f2 == -f.f2
    with pytest.raises(ValueError):
        dynamics.lorentz_force_ring(MODEL, -1.0, "Ex_Hz")


def test_ring_force_matches_current_route():
    for pol in ("Ex_Hz", "Ez_Hx"):
        for e_amp, h_amp in ((1.0, 1.0), (0.3, 2.0)):
            a = dynamics.lorentz_force_ring(MODEL, e_amp, pol, h_amp)
            b = dynamics.lorentz_force_via_current(MODEL, e_amp, pol, h_amp)
            assert a.f2 == pytest.approx(b.f2, rel=1e-13, abs=1e-15)
            assert a.f0 == pytest.approx(b.f0, rel=1e-13, abs=1e-15)


def test_magnetic_confinement():
    assert np.abs(dynamics.magnetic_confinement_density(
        [0, 0, 2.0], [0, 0, 1.0])).max() == 0.0
    np.testing.assert_array_equal(
        dynamics.magnetic_confinement_density([0, 1.0, 0], [0, 0, 1.0]),
        [1.0, 0, 0])
    jt = torus.ring_current(MODEL, 1.0, 0.0).j_tau
    f2 = dynamics.lorentz_force_ring(MODEL, 1.0, "Ex_Hz").f2
    fm = dynamics.magnetic_confinement_density([0, jt, 0], [0, 0, 1.0])
    assert float(np.linalg.norm(fm)) == pytest.approx(f2, rel=1e-14)


def _point_from_arrays(amps, ws, ks, t, y):
    vals = amps * np.exp(1j * (ws * t - ks * y))

    def emf(v):
        return EmField([v[0], 0, v[1]], [v[2], 0, v[3]])

    return dynamics.WavePoint(f=emf(vals), df_dt=emf(1j * ws * vals),
                              df_du=emf(-1j * ks * vals))


def test_linear_forms_agree_off_shell():
    rng = np.random.default_rng(12)
    for _ in range(100):
        amps = rng.normal(size=4) + 1j * rng.normal(size=4)
        point = _point_from_arrays(amps, rng.normal(size=4),
                                   rng.normal(size=4), 0.4, -0.9)
        forms = dynamics.lagrangian_linear(point, 1.0, LAYOUT, CANON)
        scale = max(abs(forms.em), 1.0)
        assert abs(forms.spinor - forms.em) <= 1e-12 * scale
        assert abs(forms.current - forms.em) <= 1e-12 * scale


def test_linear_forms_vanish_on_shell():
    omega, fields, d_dt, d_du = bridge.onshell_plane_wave(
        dirac.triad("y", "negative"), "plus", 0.8, 1.0)
    for (t, y) in ((0.0, 0.0), (1.3, -0.7)):
        point = dynamics.WavePoint(fields(t, y), d_dt(t, y), d_du(t, y))
        forms = dynamics.lagrangian_linear(point, 1.0, LAYOUT, CANON)
        assert abs(forms.spinor) <= 1e-12
        assert abs(forms.em) <= 1e-12
        assert abs(forms.current) <= 1e-12
    zero = dynamics.WavePoint(EmField.zero(), EmField.zero(), EmField.zero())
    assert dynamics.lagrangian_linear(zero, 1.0).em == 0


def _conjugate_family_point(t, y, k=0.8, w0=1.0):
    omega = math.sqrt(w0 ** 2 + k ** 2)
    amp_h = -(omega + w0) / k

    def build(scale):
        ph = scale * np.exp(1j * (omega * t - k * y))
        return EmField([ph, 0, 0], [0, 0, amp_h * ph])

    return dynamics.WavePoint(build(1.0), build(1j * omega), build(-1j * k))


def test_invariant_replacement_on_rolling_wave():
    for (t, y) in ((0.0, 0.0), (0.9, 0.3), (2.2, -1.4)):
        point = _conjugate_family_point(t, y)
        lhs, rhs = dynamics.maxwell_invariant_forms(point, omega_e=2.0)
        assert abs(lhs - rhs) <= 1e-12
    static = dynamics.WavePoint(EmField([1, 0, 0], [0, 0, 0]),
                                EmField.zero(), EmField.zero())
    lhs, rhs = dynamics.maxwell_invariant_forms(static, omega_e=2.0)
    assert lhs == pytest.approx(1 / (8 * math.pi))
    assert rhs == 0
    null = dynamics.WavePoint(EmField([1, 0, 0], [0, 0, 1]),
                              EmField.zero(), EmField.zero())
    assert dynamics.maxwell_invariant_forms(null, omega_e=2.0)[0] == 0


def test_quartic_routes_agree():
    rng = np.random.default_rng(21)
    for _ in range(100):
        e = np.array([rng.uniform(-2, 2), 0, rng.uniform(-2, 2)])
        h = np.array([rng.uniform(-2, 2), 0, rng.uniform(-2, 2)])
        point = dynamics.WavePoint(EmField(e, h), EmField.zero(),
                                   EmField.zero())
        nl = dynamics.lagrangian_nonlinear(point, MODEL, LAYOUT, CANON)
        scale = max(abs(nl.quartic_em), 1e-30)
        assert abs(nl.quartic_em - nl.quartic_invariant) <= 1e-12 * scale
        assert abs(nl.quartic_em - nl.quartic_bilinear) <= 1e-12 * scale
        assert abs(nl.quartic_em - nl.quartic_bilinear_fierz) <= 1e-12 * scale
    zero = dynamics.WavePoint(EmField.zero(), EmField.zero(), EmField.zero())
    assert dynamics.lagrangian_nonlinear(zero, MODEL).total == 0


def test_self_field_and_currents():
    f = EmField([1, 0, 0], [0, 0, 1])
    sf = dynamics.self_field(f, MODEL)
    assert sf.epsilon_s == pytest.approx(
        bridge.energy_density(f) * MODEL.delta_tau, rel=1e-15)
    np.testing.assert_allclose(sf.p_s, bridge.poynting(f) * MODEL.delta_tau,
                               atol=1e-16)
    pair = dynamics.tangential_currents(f, omega_e=2.0)
    np.testing.assert_allclose(pair.j_e, 1j / (2 * math.pi) * f.e, atol=1e-16)
    np.testing.assert_allclose(pair.j_m, 1j / (2 * math.pi) * f.h, atol=1e-16)


def test_photon_photon_comparison():
    gm = torus.derive_parameters(torus.UnitSystem.gaussian_cgs(), 1.0)
    comp = dynamics.photon_photon_comparison(gm)
    assert comp["eh_squared_coefficient_self"] == 4.0
    assert comp["eh_squared_coefficient_perturbative"] == 7.0
    u = torus.UnitSystem.gaussian_cgs()
    expected_b = (2 / 45) * u.e ** 4 * u.hbar / (u.m_e ** 4 * u.c ** 7)
    assert comp["quartic_scale_perturbative"] == pytest.approx(expected_b,
                                                               rel=1e-15)


def test_self_action_constant():
    alpha_q = torus.coupling_constant(1.0)
    assert dynamics.self_action_constant(MODEL, alpha_q) == pytest.approx(
        math.pi / 32, rel=1e-15)
    small = torus.derive_parameters(NAT, 0.01)
    assert dynamics.self_action_constant(small, alpha_q) == pytest.approx(
        (0.01 ** 2 / (2 * alpha_q)) * 0.125, rel=1e-12)
    from dataclasses import replace
    doubled = replace(MODEL, r_s=2 * MODEL.r_s)
    assert dynamics.self_action_constant(doubled, alpha_q) == pytest.approx(
        8 * dynamics.self_action_constant(MODEL, alpha_q), rel=1e-15)


def test_centripetal_check():
    rep = dynamics.centripetal_check(2.0, 0.5)
    np.testing.assert_allclose(rep.curl, [0, 0, 4.0], atol=1e-8)
    assert rep.acceleration_magnitude == pytest.approx(2.0, abs=1e-8)
    np.testing.assert_allclose(rep.acceleration, [2.0, 0, 0], atol=1e-8)
    still = dynamics.centripetal_check(0.0, 0.5)
    assert np.abs(still.curl).max() == 0.0
    assert still.acceleration_magnitude == 0.0
    for omega, r in ((0.7, 1.3), (3.1, 0.2)):
        rep = dynamics.centripetal_check(omega, r)
        assert rep.acceleration_magnitude * r / (omega * r) ** 2 == \
            pytest.approx(1.0, abs=1e-6)
    with pytest.raises(ValueError):
        dynamics.centripetal_check(1.0, 0.0)


def test_matter_motion_balanced_rotation():
    rho, omega = 1.3, 0.9

    def g_field(p):
        return rho * np.array([-omega * p[1], omega * p[0], 0.0])

    def u_field(p):
        return rho * omega ** 2 * (p[0] ** 2 + p[1] ** 2)

    def v_field(p):
        return np.array([-omega * p[1], omega * p[0], 0.0])

    pts = [(0.5, 0.0, 0.0), (0.2, 0.4, 0.1)]
    res = dynamics.matter_motion_residual(g_field, u_field, v_field, pts)
    assert np.abs(res).max() <= 1e-7

    def zero3(_p):
        return np.zeros(3)

    res0 = dynamics.matter_motion_residual(zero3, lambda _p: 0.0, zero3, pts)
    assert np.abs(res0).max() == 0.0
