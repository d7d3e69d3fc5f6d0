"""Named verification suites.

Each suite runs deterministically under (seed, suite name) and returns
CheckReports plus discrepancy-ledger entries.  Randomized identities draw an
independent stream per suite, so suite order never affects values.
"""
from __future__ import annotations

import math
from dataclasses import replace

import numpy as np

from . import bridge, dirac, dynamics, planewave, torus
from .bridge import BilinearKind, EmField
from .report import CheckReport, Discrepancy, RunConfig, rng_for_suite

A5_LITERAL = np.array([[0, 0, -1j, 0],
                       [0, 0, 0, -1j],
                       [1j, 0, 0, 0],
                       [0, 1j, 0, 0]])


def _random_unitary(rng):
    z = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def _random_layout_field(rng, layout):
    """Random real field with support only on the layout's slots."""
    e = np.zeros(3)
    h = np.zeros(3)
    for kind, arr in (("e", e), ("h", h)):
        for ax in layout.covered(kind):
            arr[bridge.AXIS_INDEX[ax]] = rng.uniform(-2.0, 2.0)
    return EmField(e, h)


def suite_algebra(cfg: RunConfig):
    rng = rng_for_suite(cfg.seed, "algebra")
    checks, ledger = [], []
    canon = dirac.canonical_alpha_set()
    prime = dirac.alpha_prime_set()

    checks.append(CheckReport.build(
        "algebra/anticommutation-canonical", "alpha-set anticommutation",
        0.0, dirac.anticommutation_deviation(canon), tol_abs=0.0, tol_rel=0.0,
        notes="{a_mu, a_nu} = 2 delta I over the four generators, exact"))
    checks.append(CheckReport.build(
        "algebra/pseudoscalar-entries", "a5 = a1 a2 a3 a4",
        0.0, float(np.abs(canon.a5 - A5_LITERAL).max()), tol_abs=0.0, tol_rel=0.0,
        notes="product matrix against its independently tabulated entries"))
    checks.append(CheckReport.build(
        "algebra/pseudoscalar-anticommutation", "a5 anticommutes with a1..a4",
        0.0, dirac.a5_anticommutation_deviation(canon), tol_abs=0.0, tol_rel=0.0))
    checks.append(CheckReport.build(
        "algebra/hermiticity-canonical", "all canonical matrices hermitian",
        0.0, max(dirac.hermiticity_deviations(canon).values()),
        tol_abs=0.0, tol_rel=0.0))
    checks.append(CheckReport.build(
        "algebra/group-order", "closure has 16 phase classes",
        16, len(dirac.generate_group(canon)), tol_abs=0.0, tol_rel=0.0))

    s = dirac.s_matrix()
    checks.append(CheckReport.build(
        "algebra/mixing-unitarity", "mixing matrix unitary",
        0.0, float(np.abs(s.conj().T @ s - np.eye(4)).max()), tol_abs=1e-15))

    match = dirac.transform_mode_match(s, canon, prime)
    sim = match["similarity"]
    clean = max(v for k, v in sim.items() if k != "a2")
    checks.append(CheckReport.build(
        "algebra/transform-mode", "similarity mode maps canonical onto prime",
        0.0, clean, tol_abs=1e-15,
        notes="winning mode: similarity (S^+ a S); two-sided deviation "
              f"{max(match['two_sided'].values()):.3g}; a2 mismatch ledgered"))
    ledger.append(Discrepancy(
        claim="alpha-prime/a2-block", stated=1.0, computed=-1.0, ratio=-1.0,
        note="the tabulated a2 lower-right block is not hermitian; the "
             "similarity transform of the canonical set fixes its (4,3) entry "
             "imaginary part at -1 where +1 is tabulated"))
    checks.append(CheckReport.build(
        "algebra/anticommutation-prime", "prime set anticommutation",
        0.0, dirac.anticommutation_deviation(prime), tol_abs=0.0, tol_rel=0.0,
        notes="fails as tabulated through the defective a2 block",
        ledgered=True))
    checks.append(CheckReport.build(
        "algebra/hermiticity-prime-a2", "prime a2 hermitian",
        0.0, dirac.hermiticity_deviations(prime)["a2"], tol_abs=0.0,
        tol_rel=0.0, notes="deviation 2 as tabulated", ledgered=True))

    dev = 0.0
    for _ in range(8):
        u = _random_unitary(rng)
        moved = dirac.canonical_transform(u, canon, "similarity")
        dev = max(dev, dirac.anticommutation_deviation(moved))
    checks.append(CheckReport.build(
        "algebra/similarity-preserves-anticommutation",
        "similarity transforms preserve the algebra", 0.0, dev,
        tol_abs=cfg.tol_abs))

    expected_slots = {
        ("negative", "y"): ("x", "z"),
        ("positive", "x"): ("y", "z"),
        ("positive", "z"): ("x", "y"),
    }
    mismatches = 0
    for (orient, axis), pair in expected_slots.items():
        t = dirac.triad(axis, orient)
        if t.e_axes != pair or t.h_axes != pair:
            mismatches += 1
    checks.append(CheckReport.build(
        "algebra/triad-layouts", "tabulated slot orders", 0, mismatches,
        tol_abs=0.0, tol_rel=0.0))

    # component mixing: psi' = S^+ psi reproduces the stated combinations
    # except for the sign of the fourth component
    layout = bridge.electron_layout()
    f = _random_layout_field(rng, layout)
    psi = bridge.bispinor_from_fields(f, layout)
    psi_p = s.conj().T @ psi
    ex, ez = f.e[0], f.e[2]
    hx, hz = f.h[0], f.h[2]
    stated = np.array([ex + 1j * hx, ez + 1j * hz, ez - 1j * hz, ex - 1j * hx])
    stated = stated / math.sqrt(2)
    first_three = float(np.abs(psi_p[:3] - stated[:3]).max())
    fourth_flipped = float(np.abs(psi_p[3] + stated[3]))
    checks.append(CheckReport.build(
        "algebra/mixing-components", "psi' = S^+ psi component table",
        0.0, first_three, tol_abs=1e-14,
        notes="components 1..3 as stated; component 4 ledgered"))
    ledger.append(Discrepancy(
        claim="mixing/psi-prime-fourth-component",
        stated=1.0, computed=-1.0, ratio=-1.0,
        note=f"the stated fourth combination has the opposite sign "
             f"(deviation from the negated value {fourth_flipped:.2e}); the "
             f"round trip S psi' = psi holds with the negated component"))
    round_trip = float(np.abs(s @ psi_p - psi).max())
    checks.append(CheckReport.build(
        "algebra/mixing-round-trip", "S psi' = psi", 0.0, round_trip,
        tol_abs=1e-14))
    return checks, ledger


def suite_bilinear(cfg: RunConfig):
    rng = rng_for_suite(cfg.seed, "bilinear")
    checks, ledger = [], []
    canon = dirac.canonical_alpha_set()
    vector_kinds = {"a1": BilinearKind.VECTOR1, "a2": BilinearKind.VECTOR2,
                    "a3": BilinearKind.VECTOR3}

    for t in dirac.axis_triads():
        layout = bridge.layout_for_triad(t)
        worst = 0.0
        for _ in range(cfg.samples):
            f = _random_layout_field(rng, layout)
            psi = bridge.bispinor_from_fields(f, layout)
            e2, h2 = bridge.e_squared(f), bridge.h_squared(f)
            exh = np.cross(f.e.real, f.h.real)
            scale = max(e2 + h2, 1e-30)
            b0 = bridge.bilinear(BilinearKind.VECTOR0, psi, canon)
            b4 = bridge.bilinear(BilinearKind.SCALAR, psi, canon)
            b5 = bridge.bilinear(BilinearKind.PSEUDOSCALAR, psi, canon)
            worst = max(worst,
                        abs(b0 - (e2 + h2)) / scale,
                        abs(b4 - (e2 - h2)) / scale,
                        abs(b5 - 2 * bridge.eh_dot(f)) / scale)
            for name, kind in vector_kinds.items():
                bv = bridge.bilinear(kind, psi, canon)
                assigned_axis = dict(t.matrix_axes)[name]
                if name == t.working:
                    target = t.sign * 2 * exh[bridge.AXIS_INDEX[assigned_axis]]
                else:
                    target = 0.0
                worst = max(worst, abs(bv - target) / scale)
        checks.append(CheckReport.build(
            f"bilinear/dictionary-{t.name}",
            "bilinears equal the field invariants", 0.0, worst,
            tol_abs=cfg.tol_rel, tol_rel=cfg.tol_rel,
            notes=f"{cfg.samples} samples; working axis sign {t.sign:+d}"))

    worst = 0.0
    for t in dirac.axis_triads():
        for conj in (False, True):
            layout = bridge.layout_for_triad(t, charge_conjugated=conj)
            for _ in range(16):
                f = _random_layout_field(rng, layout)
                back = bridge.fields_from_bispinor(
                    bridge.bispinor_from_fields(f, layout), layout)
                worst = max(worst, float(np.abs(back.e - f.e).max()),
                            float(np.abs(back.h - f.h).max()))
    checks.append(CheckReport.build(
        "bilinear/round-trip", "fields -> spinor -> fields is the identity",
        0.0, worst, tol_abs=0.0, tol_rel=0.0))

    pos = bridge.bispinor_from_fields(
        EmField([1, 0, 0], [0, 0, 1]), bridge.positron_layout())
    checks.append(CheckReport.build(
        "bilinear/charge-conjugate-slots", "conjugate layout spot value",
        0.0, float(np.abs(pos - np.array([1, 0, 0, -1j])).max()),
        tol_abs=0.0, tol_rel=0.0))

    s = dirac.s_matrix()
    primed = dirac.canonical_transform(s, canon, "similarity")
    worst = 0.0
    for _ in range(min(cfg.samples, 200)):
        psi = rng.normal(size=4) + 1j * rng.normal(size=4)
        psi_p = s.conj().T @ psi
        for kind in BilinearKind:
            b_orig = bridge.bilinear(kind, psi, canon)
            b_new = bridge.bilinear(kind, psi_p, primed)
            worst = max(worst, abs(b_orig - b_new) / max(1.0, abs(b_orig)))
    checks.append(CheckReport.build(
        "bilinear/similarity-invariance",
        "bilinears invariant under the similarity change of set", 0.0, worst,
        tol_abs=cfg.tol_rel, tol_rel=cfg.tol_rel))
    return checks, ledger


def suite_fierz(cfg: RunConfig):
    rng = rng_for_suite(cfg.seed, "fierz")
    checks, ledger = [], []
    canon = dirac.canonical_alpha_set()

    worst = 0.0
    for _ in range(cfg.samples):
        f = EmField(rng.uniform(-2, 2, size=3), rng.uniform(-2, 2, size=3))
        lhs, rhs = bridge.fierz_em(f)
        scale = max((bridge.e_squared(f) + bridge.h_squared(f)) ** 2, 1e-30)
        worst = max(worst, abs(lhs - rhs) / scale)
    checks.append(CheckReport.build(
        "fierz/field-form", "(E^2+H^2)^2 - 4(ExH)^2 = (E^2-H^2)^2 + 4(E.H)^2",
        0.0, worst, tol_abs=cfg.tol_rel, tol_rel=cfg.tol_rel,
        notes=f"{cfg.samples} samples"))

    worst = 0.0
    for _ in range(cfg.samples):
        psi = rng.normal(size=4) + 1j * rng.normal(size=4)
        lhs, rhs = bridge.fierz_quantum(psi, canon)
        scale = max(float(np.abs(psi.conj() @ psi).real) ** 2, 1e-30)
        worst = max(worst, abs(lhs - rhs) / scale)
    checks.append(CheckReport.build(
        "fierz/bilinear-form", "squared bilinears identity", 0.0, worst,
        tol_abs=cfg.tol_rel, tol_rel=cfg.tol_rel,
        notes=f"{cfg.samples} samples"))

    layout = bridge.electron_layout()
    worst = 0.0
    for _ in range(cfg.samples):
        f = _random_layout_field(rng, layout)
        psi = bridge.bispinor_from_fields(f, layout)
        em_lhs, em_rhs = bridge.fierz_em(f)
        q_lhs, q_rhs = bridge.fierz_quantum(psi, canon)
        u = bridge.energy_density(f)
        g = bridge.poynting(f)  # momentum density times c^2
        link = (8 * math.pi) ** 2 * (u ** 2 - float(g @ g))
        scale = max((bridge.e_squared(f) + bridge.h_squared(f)) ** 2, 1e-30)
        worst = max(worst, abs(q_lhs - em_lhs) / scale,
                    abs(q_rhs - em_rhs) / scale, abs(link - em_lhs) / scale)
    checks.append(CheckReport.build(
        "fierz/layout-agreement",
        "bilinear and field forms agree through the slot map", 0.0, worst,
        tol_abs=cfg.tol_rel, tol_rel=cfg.tol_rel,
        notes="includes the energy-momentum link (8pi)^2 (U^2 - c^2 g^2)"))
    return checks, ledger


def suite_torus(cfg: RunConfig):
    checks, ledger = [], []
    units = torus.unit_system(cfg.units)
    natural = units.mode == "natural"
    model = torus.derive_parameters(units, cfg.zeta)
    model = torus.calibrate_e0(model, n_points=cfg.quadrature_points)
    npts = cfg.quadrature_points
    exact = dict(tol_abs=0.0, tol_rel=0.0) if natural else dict(tol_abs=0.0, tol_rel=1e-15)

    r_expected = units.hbar / (2 * units.m_e * units.c)
    checks.append(CheckReport.build(
        "torus/ring-radius", "r_s = hbar / (2 m c)", r_expected, model.r_s,
        tol_abs=0.0, tol_rel=1e-15,
        notes="half the reduced Compton wavelength"))
    checks.append(CheckReport.build(
        "torus/frequency-radius", "omega_s r_s = c", units.c,
        model.omega_s * model.r_s, **exact))
    checks.append(CheckReport.build(
        "torus/volume", "delta_tau = 2 pi^2 zeta^2 r_s^3",
        model.s_c * 2 * math.pi * model.r_s, model.delta_tau,
        tol_abs=0.0, tol_rel=1e-15,
        notes="cross-section area times ring circumference"))

    checks.append(CheckReport.build(
        "torus/coupling-constant", "alpha_q(1) near 0.637",
        0.637, torus.coupling_constant(1.0), tol_abs=5e-4,
        notes="2/pi = 0.6366197723675814"))
    worst = 0.0
    for z in np.linspace(0.05, 0.5, 10):
        worst = max(worst, abs(torus.coupling_constant(2 * z)
                               / torus.coupling_constant(z) - 4.0))
    checks.append(CheckReport.build(
        "torus/coupling-quadratic", "alpha_q(2 zeta) / alpha_q(zeta) = 4",
        0.0, worst, tol_abs=1e-14))

    scale = model.e0 * model.s_c
    checks.append(CheckReport.build(
        "torus/full-wave-charge", "full-wave charge vanishes", 0.0,
        abs(torus.integrate_charge(model, "full_wave", npts)) / scale,
        tol_abs=1e-12, notes="relative to E0 S_c"))

    stated_q = torus.charge_closed_form(model)
    density_q = torus.integrate_charge(model, "half_wave", npts)
    checks.append(CheckReport.build(
        "torus/half-wave-charge", "density quadrature vs stated closed form",
        stated_q, density_q, tol_abs=cfg.tol_abs, tol_rel=cfg.tol_rel,
        notes="off by the ledgered factor 2; see ring-charge entries",
        ledgered=True))
    checks.append(CheckReport.build(
        "torus/charge-geometric", "zeta^2 E0 r_s^2 equals (1/pi) E0 S_c",
        stated_q, torus.charge_geometric(model), tol_abs=0.0, tol_rel=1e-15))

    closed_m = torus.mass_closed_form(model)
    checks.append(CheckReport.build(
        "torus/mass-quadrature", "mass quadrature vs closed form",
        closed_m, torus.integrate_mass(model, npts), tol_abs=0.0, tol_rel=1e-10))
    checks.append(CheckReport.build(
        "torus/calibration", "calibrated amplitude reproduces m_e",
        units.m_e, torus.integrate_mass(model, npts), tol_abs=0.0, tol_rel=5e-12))

    worst = [0.0, 0.0, 0.0]
    for z in np.linspace(0.05, 1.0, 20):
        m = torus.calibrate_e0(torus.derive_parameters(units, float(z)),
                               n_points=128)
        chain = torus.consistency_chain(m)
        worst[0] = max(worst[0], abs(chain.mass_identity_ratio - 1))
        worst[1] = max(worst[1], abs(chain.radius_identity_ratio - 1))
        worst[2] = max(worst[2], abs(chain.coupling_identity_ratio - 1))
    checks.append(CheckReport.build(
        "torus/chain-closure", "charge -> mass -> radius -> coupling chain",
        0.0, max(worst), tol_abs=cfg.tol_abs,
        notes="20-point zeta sweep; mass, radius and coupling identities"))

    gauss = torus.UnitSystem.gaussian_cgs()
    gm = torus.derive_parameters(gauss, cfg.zeta)
    chain_g = torus.consistency_chain(torus.calibrate_e0(gm, n_points=128))
    checks.append(CheckReport.build(
        "torus/radius-ratio", "classical over ring radius is e^2/hbar c",
        torus.FINE_STRUCTURE, chain_g.radius_ratio, tol_abs=0.0, tol_rel=5e-3))

    q = torus.charge_geometric(model)
    sm = torus.spin_and_moment(model, q, units)
    checks.append(CheckReport.build(
        "torus/spin-full", "sigma_p = hbar", units.hbar, sm.sigma_p, **exact))
    checks.append(CheckReport.build(
        "torus/spin-half", "sigma_s = hbar / 2", units.hbar / 2, sm.sigma_s,
        **exact))
    checks.append(CheckReport.build(
        "torus/magnetic-moment", "I S_I = q hbar / (4 m)", sm.mu_closed_form,
        sm.mu_s, tol_abs=0.0, tol_rel=cfg.tol_rel,
        notes="loop current times loop area vs the closed form"))

    z = torus.zitterbewegung(units)
    checks.append(CheckReport.build(
        "torus/zitter-frequency", "omega_z = omega_s", model.omega_s,
        z.omega_z, **exact))
    checks.append(CheckReport.build(
        "torus/zitter-radius", "r_z = r_s", model.r_s, z.r_z, **exact))
    checks.append(CheckReport.build(
        "torus/zitter-speed", "omega_z r_z = c", units.c, z.omega_z * z.r_z,
        **exact))

    ledger.extend(torus.discrepancy_ledger(model, npts))
    return checks, ledger


def suite_planewave(cfg: RunConfig):
    rng = rng_for_suite(cfg.seed, "planewave")
    checks, ledger = [], []
    canon = dirac.canonical_alpha_set()
    mass, c = 1.0, 1.0
    mc2 = mass * c * c

    worst_res, worst_orth, worst_det = 0.0, 0.0, 0.0
    for _ in range(cfg.samples):
        p = rng.uniform(-10 * mass * c, 10 * mass * c, size=3)
        for branch in ("positive", "negative"):
            s1, s2 = planewave.make_states(branch, p, mass, c)
            worst_res = max(worst_res,
                            planewave.residual(s1, canon, mass, c),
                            planewave.residual(s2, canon, mass, c))
            n1 = float(np.abs(s1.amplitudes).max())
            n2 = float(np.abs(s2.amplitudes).max())
            inner = abs(complex(s1.amplitudes.conj() @ s2.amplitudes))
            worst_orth = max(worst_orth, inner / (n1 * n2))
            m = planewave.build_system(s1.energy, p, mass, c)
            worst_det = max(worst_det, abs(np.linalg.det(m)))
    checks.append(CheckReport.build(
        "planewave/residual", "closed-form amplitudes solve the system",
        0.0, worst_res, tol_abs=1e-12 * mc2,
        notes=f"{cfg.samples} momenta, both branches, |p| <= 10 m c"))
    checks.append(CheckReport.build(
        "planewave/orthogonality", "the two amplitude vectors per branch",
        0.0, worst_orth, tol_abs=cfg.tol_rel))
    checks.append(CheckReport.build(
        "planewave/determinant-on-shell", "determinant vanishes on shell",
        0.0, worst_det, tol_abs=1e-10 * mc2 ** 4))

    p0 = np.zeros(3)
    det_off = abs(np.linalg.det(planewave.build_system(1.5 * mc2, p0, mass, c)))
    checks.append(CheckReport.build(
        "planewave/determinant-off-shell", "detuned energy gives det != 0",
        (1.5 ** 2 - 1.0) ** 2 * mc2 ** 4, det_off, tol_abs=1e-10,
        notes="(eps^2 - m^2 c^4 - c^2 p^2)^2 at eps = 1.5 m c^2"))

    worst = 0.0
    for _ in range(64):
        p = rng.uniform(-3, 3, size=3)
        eps = rng.uniform(-4, 4)
        det = np.linalg.det(planewave.build_system(eps, p, mass, c))
        formula = (eps ** 2 - mc2 ** 2 - c * c * float(p @ p)) ** 2
        worst = max(worst, abs(det - formula) / max(1.0, abs(formula)))
    checks.append(CheckReport.build(
        "planewave/determinant-formula",
        "det = (eps^2 - m^2 c^4 - c^2 p^2)^2", 0.0, worst, tol_abs=1e-12))

    p = np.array([0.0, 1.3 * mass * c, 0.0])
    worst_null = 0.0
    for branch in ("positive", "negative"):
        eps = planewave.dispersion(p, mass, c)[0 if branch == "positive" else 1]
        basis = planewave.nullspace(planewave.build_system(eps, p, mass, c))
        worst_null = max(worst_null, abs(len(basis) - 2))
        closed = planewave.solution_basis(branch, p, mass, c)
        for v in basis:
            # compare up to the overall scale left free by the elimination
            best = math.inf
            for r in closed:
                j = int(np.argmax(np.abs(r)))
                if abs(v[j]) == 0:
                    continue
                best = min(best, float(np.abs(v * (r[j] / v[j]) - r).max()))
            worst_null = max(worst_null, best)
    checks.append(CheckReport.build(
        "planewave/nullspace", "rank-2 nullspace spans the closed forms",
        0.0, worst_null, tol_abs=cfg.tol_rel))

    s1, s2 = planewave.make_states("positive", p, mass, c)
    n1, n2 = planewave.make_states("negative", p, mass, c)
    pattern = {
        "planewave/sparsity-positive-1": (s1, (False, True, True, False)),
        "planewave/sparsity-positive-2": (s2, (True, False, False, True)),
        "planewave/sparsity-negative-1": (n1, (True, False, False, True)),
        "planewave/sparsity-negative-2": (n2, (False, True, True, False)),
    }
    layout = bridge.electron_layout()
    for cid, (state, want) in pattern.items():
        got = planewave.field_interpretation(state, layout).sparsity
        checks.append(CheckReport.build(
            cid, "amplitude sparsity pattern", 0, int(got != want),
            tol_abs=0.0, tol_rel=0.0, notes=f"pattern {got}"))

    special = planewave.special_amplitude_values(mass, c)
    tables = {
        ("positive", 0): np.array([0, 0.5, 1j, 0]),
        ("positive", 1): np.array([-0.5, 0, 0, 1j]),
        ("negative", 0): np.array([1j, 0, 0, -0.5]),
        ("negative", 1): np.array([0, 1j, 0.5, 0]),
    }
    worst = 0.0
    for (branch, idx), want in tables.items():
        got = special["literal"][branch][idx]
        worst = max(worst, float(np.abs(got - want).max()))
    checks.append(CheckReport.build(
        "planewave/special-values", "stated amplitude table reproduced",
        0.0, worst, tol_abs=1e-12,
        notes="literal substitution energy = m c^2 at momentum m c; "
              "off-shell inconsistency ledgered"))
    ledger.append(special["ledger"])

    lit_state = planewave.PlaneWaveState(
        energy=mc2, momentum=np.array([0.0, mass * c, 0.0]),
        amplitudes=special["literal"]["positive"][0], phase=math.pi / 2,
        branch="positive")
    interp = planewave.field_interpretation(lit_state, layout)
    ledger.append(Discrepancy(
        claim="planewave/amplitude-ratio",
        stated=0.5, computed=interp.h_amplitude / interp.e_amplitude,
        ratio=interp.h_amplitude / interp.e_amplitude / 0.5,
        note="the claim reads the magnetic amplitude as half the electric "
             "one; through the slot map the magnetic amplitude is twice "
             "the electric one at the stated substitution"))

    worst = 0.0
    for _ in range(32):
        p = rng.uniform(-5, 5, size=3)
        ep, em = planewave.dispersion(p, mass, c)
        ep2, em2 = planewave.dispersion(-p, mass, c)
        worst = max(worst, abs(ep - ep2), abs(em - em2))
    checks.append(CheckReport.build(
        "planewave/dispersion-symmetry", "dispersion(p) = dispersion(-p)",
        0.0, worst, tol_abs=0.0, tol_rel=0.0))

    model = torus.derive_parameters(torus.UnitSystem.natural(), cfg.zeta)
    cont = planewave.continuity_check(s1, canon, volume=model.delta_tau,
                                      energy_scale=8 * math.pi * mc2, c=c)
    checks.append(CheckReport.build(
        "planewave/continuity", "dP/dt + div flux vanishes", 0.0,
        cont.deviation, tol_abs=1e-12))
    checks.append(CheckReport.build(
        "planewave/normalization", "rescaled wave integrates to 1", 1.0,
        cont.normalization, tol_abs=0.0, tol_rel=1e-12))

    # first-order system expansion: matrix and component routes agree
    k = 0.8
    for t in dirac.axis_triads():
        for form in ("plus", "minus"):
            omega, fields, d_dt, d_du = bridge.onshell_plane_wave(
                t, form, k, mass, e1_amp=1.0, e2_amp=0.7, c=c)
            rep = bridge.dirac_residual_em(
                fields, t, mass, form, t_grid=np.linspace(0, 2.0, 4),
                u_grid=np.linspace(-1.0, 1.0, 5), d_dt=d_dt, d_du=d_du, c=c)
            scale = max(omega, 1.0)
            checks.append(CheckReport.build(
                f"planewave/expansion-{t.name}-{form}",
                "scalar rows equal the matrix residual and vanish on shell",
                0.0, max(rep.cross_deviation, rep.max_scalar),
                tol_abs=1e-12 * scale,
                notes=f"omega={omega:.6f}, k={k}"))

    t = dirac.triad("y", "negative")
    omega, fields, d_dt, d_du = bridge.onshell_plane_wave(t, "plus", k, mass)

    def detuned(tt, uu):
        return fields(1.1 * tt, uu)

    def detuned_dt(tt, uu):
        inner = d_dt(1.1 * tt, uu)
        return bridge.EmField(1.1 * inner.e, 1.1 * inner.h)

    def detuned_du(tt, uu):
        return d_du(1.1 * tt, uu)

    rep = bridge.dirac_residual_em(
        detuned, t, mass, "plus", t_grid=np.linspace(0.1, 1.7, 3),
        u_grid=np.linspace(-0.9, 0.9, 3),
        d_dt=detuned_dt, d_du=detuned_du, c=c)
    checks.append(CheckReport.build(
        "planewave/expansion-detuned", "detuned frequency leaves a residual",
        1.0, float(rep.max_scalar > 0.01), tol_abs=0.0, tol_rel=0.0,
        notes=f"max residual {rep.max_scalar:.4f} on a 10% detuned wave"))

    rep_fd = bridge.dirac_residual_em(
        fields, t, mass, "plus", t_grid=np.linspace(0, 1.0, 3),
        u_grid=np.linspace(-0.5, 0.5, 3), c=c, fd_step=1e-4 * 2 * math.pi / k,
        fd_tol=1e-6)
    checks.append(CheckReport.build(
        "planewave/expansion-finite-difference",
        "finite-difference route agrees within its truncation", 0.0,
        max(rep_fd.cross_deviation, rep_fd.max_scalar), tol_abs=1e-6))
    return checks, ledger


def suite_dynamics(cfg: RunConfig):
    rng = rng_for_suite(cfg.seed, "dynamics")
    checks, ledger = [], []
    canon = dirac.canonical_alpha_set()
    units = torus.UnitSystem.natural()
    model = torus.derive_parameters(units, cfg.zeta)

    worst = 0.0
    for _ in range(min(cfg.samples, 200)):
        f = EmField(rng.uniform(-2, 2, size=3), rng.uniform(-2, 2, size=3))
        st = dynamics.stress_tensor(f)
        scale = max(st.tau_00, 1e-30)
        flux = 4 * math.pi * bridge.poynting(f) / 1.0
        worst = max(worst,
                    float(np.abs(st.tau_p0 - flux).max()) / scale,
                    abs(st.tau_00 - 4 * math.pi * bridge.energy_density(f)) / scale,
                    abs(float(np.trace(st.tau_pq)) - st.tau_00) / scale,
                    float(np.abs(st.tau_pq - st.tau_pq.T).max()) / scale)
    checks.append(CheckReport.build(
        "dynamics/stress-consistency",
        "flux row, energy density, trace and symmetry", 0.0, worst,
        tol_abs=cfg.tol_rel, tol_rel=cfg.tol_rel))
    checks.append(CheckReport.build(
        "dynamics/stress-example", "tau_00 of a unit electric field", 0.5,
        dynamics.stress_tensor(EmField([1, 0, 0], [0, 0, 0])).tau_00,
        tol_abs=0.0, tol_rel=0.0))

    force = dynamics.lorentz_force_ring(model, 1.0, "Ex_Hz")
    checks.append(CheckReport.build(
        "dynamics/ring-force", "f0 = omega E^2 / 4 pi c at unit amplitude",
        1 / (2 * math.pi), force.f0, tol_abs=0.0, tol_rel=1e-15))
    worst = 0.0
    for pol in ("Ex_Hz", "Ez_Hx"):
        for e_amp, h_amp in ((1.0, 1.0), (0.5, 2.0), (2.2, 0.0)):
            a = dynamics.lorentz_force_ring(model, e_amp, pol, h_amp)
            b = dynamics.lorentz_force_via_current(model, e_amp, pol, h_amp)
            worst = max(worst, abs(a.f2 - b.f2), abs(a.f0 - b.f0))
    checks.append(CheckReport.build(
        "dynamics/ring-force-current-route",
        "force components equal (1/c) j_tau H and (1/c) j_tau E", 0.0, worst,
        tol_abs=cfg.tol_abs))
    neg = dynamics.lorentz_force_ring(model, 1.0, "Ez_Hx")
    checks.append(CheckReport.build(
        "dynamics/ring-force-opposite-polarization",
        "rotation about OX negates the components", -force.f0, neg.f0,
        tol_abs=0.0, tol_rel=0.0))

    j_tau = np.array([0.0, 1.0, 0.0])
    h_vec = np.array([0.0, 0.0, 1.0])
    fm = dynamics.magnetic_confinement_density(j_tau, h_vec, c=1.0)
    checks.append(CheckReport.build(
        "dynamics/confinement-cross", "(1/c) j x H spot value", 0.0,
        float(np.abs(fm - np.array([1.0, 0, 0])).max()), tol_abs=0.0,
        tol_rel=0.0))
    jt = torus.ring_current(model, 1.0, 0.0).j_tau
    fm2 = dynamics.magnetic_confinement_density([0, jt, 0], [0, 0, 1.0],
                                                c=units.c)
    checks.append(CheckReport.build(
        "dynamics/confinement-matches-ring",
        "confinement density equals the ring f2", force.f2,
        float(np.linalg.norm(fm2)), tol_abs=0.0, tol_rel=1e-14))

    mass, c = 1.0, 1.0
    w0 = mass * c * c  # hbar = 1
    layout = bridge.electron_layout()

    def wave_point(amp, ws, ks, t, y):
        """Four independently oscillating slot components."""
        phases = np.exp(1j * (ws * t - ks * y))
        comp = amp * phases
        def emf(vals):
            e = np.array([vals[0], 0, vals[1]], dtype=complex)
            h = np.array([vals[2], 0, vals[3]], dtype=complex)
            return EmField(e, h)
        return dynamics.WavePoint(f=emf(comp), df_dt=emf(1j * ws * comp),
                                  df_du=emf(-1j * ks * comp))

    worst = 0.0
    for _ in range(min(cfg.samples, 200)):
        amp = rng.normal(size=4) + 1j * rng.normal(size=4)
        ws, ks = rng.normal(size=4), rng.normal(size=4)
        point = wave_point(amp, ws, ks, 0.3, 1.1)
        forms = dynamics.lagrangian_linear(point, mass, layout, canon, c)
        scale = max(abs(forms.em), 1.0)
        worst = max(worst, abs(forms.spinor - forms.em) / scale,
                    abs(forms.current - forms.em) / scale)
    checks.append(CheckReport.build(
        "dynamics/linear-forms", "spinor, field and current routes agree",
        0.0, worst, tol_abs=cfg.tol_rel, tol_rel=cfg.tol_rel))

    t_ax = dirac.triad("y", "negative")
    k = 0.8
    omega, fields, d_dt, d_du = bridge.onshell_plane_wave(t_ax, "plus", k, mass)
    worst = 0.0
    for (tt, yy) in ((0.0, 0.0), (0.7, -1.2), (2.1, 0.4)):
        point = dynamics.WavePoint(f=fields(tt, yy), df_dt=d_dt(tt, yy),
                                   df_du=d_du(tt, yy))
        forms = dynamics.lagrangian_linear(point, mass, layout, canon, c)
        worst = max(worst, abs(forms.spinor), abs(forms.em), abs(forms.current))
    checks.append(CheckReport.build(
        "dynamics/linear-on-shell", "all three routes vanish on shell",
        0.0, worst, tol_abs=1e-12))

    # rolling-wave solution with the conjugate current direction: the
    # invariant-replacement identity is specific to this family
    omega = math.sqrt(w0 ** 2 + (c * k) ** 2)
    amp_h = -(omega + w0) / (c * k)

    def conj_fields(tt, yy, scale=1.0):
        ph = scale * np.exp(1j * (omega * tt - k * yy))
        return EmField([ph, 0, 0], [0, 0, amp_h * ph])

    worst = 0.0
    for (tt, yy) in ((0.0, 0.0), (0.9, 0.3), (1.7, -0.8)):
        point = dynamics.WavePoint(
            f=conj_fields(tt, yy),
            df_dt=conj_fields(tt, yy, 1j * omega),
            df_du=conj_fields(tt, yy, -1j * k))
        lhs, rhs = dynamics.maxwell_invariant_forms(point, 2 * w0, layout, c)
        worst = max(worst, abs(lhs - rhs))
    checks.append(CheckReport.build(
        "dynamics/invariant-replacement",
        "(E^2-H^2)/8pi = (i/omega_e)(dU/dt + div S) on the rolling wave",
        0.0, worst, tol_abs=1e-12))
    static = dynamics.WavePoint(f=EmField([1, 0, 0], [0, 0, 0]),
                                df_dt=EmField.zero(), df_du=EmField.zero())
    lhs, rhs = dynamics.maxwell_invariant_forms(static, 2 * w0, layout, c)
    ledger.append(Discrepancy(
        claim="dynamics/invariant-replacement-static",
        stated=float(lhs.real if hasattr(lhs, "real") else lhs),
        computed=complex(rhs), ratio=0.0,
        note="a static field separates the two sides; the identity holds "
             "only on the rolling-wave family"))

    worst = 0.0
    for _ in range(min(cfg.samples, 200)):
        f = _random_layout_field(rng, layout)
        point = dynamics.WavePoint(f=f, df_dt=EmField.zero(),
                                   df_du=EmField.zero())
        nl = dynamics.lagrangian_nonlinear(point, model, layout, canon, c)
        scale = max(abs(nl.quartic_em), 1e-30)
        worst = max(worst,
                    abs(nl.quartic_em - nl.quartic_invariant) / scale,
                    abs(nl.quartic_em - nl.quartic_bilinear) / scale,
                    abs(nl.quartic_em - nl.quartic_bilinear_fierz) / scale)
    checks.append(CheckReport.build(
        "dynamics/quartic-routes",
        "energy-momentum, invariant and bilinear quartics agree", 0.0, worst,
        tol_abs=cfg.tol_rel, tol_rel=cfg.tol_rel))

    comp = dynamics.photon_photon_comparison(
        torus.derive_parameters(torus.UnitSystem.gaussian_cgs(), cfg.zeta))
    checks.append(CheckReport.build(
        "dynamics/photon-photon-structure",
        "(E.H)^2 coefficient pair of the two quartics", 7.0,
        comp["eh_squared_coefficient_perturbative"], tol_abs=0.0, tol_rel=0.0,
        notes=f"self-interaction coefficient "
              f"{comp['eh_squared_coefficient_self']}; perturbative scale "
              f"b = {comp['quartic_scale_perturbative']!r} erg^-1 cm^3"))

    alpha_q = torus.coupling_constant(1.0)
    model1 = torus.derive_parameters(units, 1.0)
    checks.append(CheckReport.build(
        "dynamics/self-action-constant", "coefficient at zeta = 1",
        math.pi / 32, dynamics.self_action_constant(model1, alpha_q),
        tol_abs=0.0, tol_rel=1e-15))
    doubled = replace(model1, r_s=2 * model1.r_s)
    checks.append(CheckReport.build(
        "dynamics/self-action-cubic", "doubling r_s scales the constant by 8",
        8 * dynamics.self_action_constant(model1, alpha_q),
        dynamics.self_action_constant(doubled, alpha_q), tol_abs=0.0,
        tol_rel=1e-15))

    rep = dynamics.centripetal_check(2.0, 0.5)
    checks.append(CheckReport.build(
        "dynamics/centripetal-curl", "curl v = 2 omega", 4.0,
        float(rep.curl[2]), tol_abs=1e-8,
        notes=f"off-axis components {np.abs(rep.curl[:2]).max():.2e}"))
    checks.append(CheckReport.build(
        "dynamics/centripetal-acceleration", "|v x curl v| / 2 = v^2 / r",
        2.0, rep.acceleration_magnitude, tol_abs=1e-8))
    worst = 0.0
    for _ in range(16):
        omega = float(rng.uniform(0.1, 5.0))
        r = float(rng.uniform(0.1, 3.0))
        rr = dynamics.centripetal_check(omega, r)
        worst = max(worst, abs(rr.acceleration_magnitude * r
                               / (omega * r) ** 2 - 1.0))
    checks.append(CheckReport.build(
        "dynamics/centripetal-identity", "a r / v^2 = 1", 0.0, worst,
        tol_abs=1e-6))

    rho, omega = 1.3, 0.9

    def g_field(p):
        return rho * np.array([-omega * p[1], omega * p[0], 0.0])

    def u_field(p):
        return rho * omega ** 2 * (p[0] ** 2 + p[1] ** 2)

    def v_field(p):
        return np.array([-omega * p[1], omega * p[0], 0.0])

    pts = [(0.5, 0.0, 0.0), (0.2, 0.4, 0.1), (-0.3, 0.2, -0.2)]
    res = dynamics.matter_motion_residual(g_field, u_field, v_field, pts)
    checks.append(CheckReport.build(
        "dynamics/matter-motion-balanced",
        "rigid rotation with its pressure balances", 0.0,
        float(np.abs(res).max()), tol_abs=1e-7))
    res_liquid = dynamics.matter_motion_residual(g_field, u_field, v_field, pts)
    checks.append(CheckReport.build(
        "dynamics/motion-term-shape",
        "particle and liquid forms share term shapes", 0.0,
        float(np.abs(res - res_liquid).max()), tol_abs=0.0, tol_rel=0.0,
        notes="same evaluator, same inputs, identical output"))

    ring = torus.calibrate_e0(model)
    k_ring = ring.k

    def ring_g(p):
        r2 = p[0] ** 2 + p[1] ** 2
        u_dens = ring.e0 ** 2 * math.cos(k_ring * math.sqrt(r2)) ** 2 / (4 * math.pi)
        return (u_dens / units.c) * np.array([-p[1], p[0], 0.0]) / max(math.sqrt(r2), 1e-12)

    def ring_u(p):
        return ring.e0 ** 2 * math.cos(
            k_ring * math.hypot(p[0], p[1])) ** 2 / (4 * math.pi)

    def ring_v(p):
        r = max(math.hypot(p[0], p[1]), 1e-12)
        return units.c * np.array([-p[1], p[0], 0.0]) / r

    ring_pts = [(ring.r_s, 0.0, 0.0), (0.0, ring.r_s, 0.0)]
    ring_res = dynamics.matter_motion_residual(ring_g, ring_u, ring_v, ring_pts)
    checks.append(CheckReport.build(
        "dynamics/matter-motion-ring", "ring-wave residual (exploratory)",
        0.0, float(np.abs(ring_res).max()), tol_abs=0.0, tol_rel=0.0,
        notes="profile emitted without a verdict; no threshold stated",
        ledgered=True))
    return checks, ledger


SUITE_FUNCS = {
    "algebra": suite_algebra,
    "bilinear": suite_bilinear,
    "fierz": suite_fierz,
    "torus": suite_torus,
    "planewave": suite_planewave,
    "dynamics": suite_dynamics,
}


def run_suites(cfg: RunConfig, names):
    checks, ledger = [], []
    for name in names:
        c, l = SUITE_FUNCS[name](cfg)
        checks.extend(c)
        ledger.extend(l)
    return checks, ledger
