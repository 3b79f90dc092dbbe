"""Smoke tests for the compiled extension: every module surface gets exercised
once with a value pinned by an independent calculation."""

import math

import pytest

import stoclab as s


def rel_err(got, want):
    return abs(got - want) / abs(want)


@pytest.fixture(scope="module")
def table():
    return s.default_table()


def test_version():
    assert s.__version__


def test_constants_and_compton_scales(table):
    pion = table.particle("pion")
    electron = table.particle("electron")
    assert pion.mass == 2.488e-25
    assert electron.mass == 9.109e-28
    k = table.constants
    assert rel_err(s.compton_wavelength(pion, k), 1.4143942e-13) < 1e-6
    assert rel_err(s.compton_time(pion, k), 4.7177924e-24) < 1e-6
    assert s.compton_wavelength(pion, k, reduced=False) == pytest.approx(
        2 * math.pi * s.compton_wavelength(pion, k)
    )
    t_c = pion.mass * k.c**2 / k.k_B
    assert rel_err(s.thermal_wavelength(pion, t_c, k), s.compton_wavelength(pion, k)) < 1e-12


def test_config_text_round_trip(table):
    text = s.table_to_text(table)
    back = s.load_table_text(text)
    assert back.constants.hbar == table.constants.hbar
    assert back.particle("pion").mass == table.particle("pion").mass


def test_random_walk():
    spec = s.WalkSpec()
    spec.steps = 100
    spec.dim = 3
    spec.walkers = 2000
    spec.seed = 42
    res = s.estimate_rms(spec)
    assert res.walkers == 2000
    # E[r^2] = N l^2 within 5 standard errors
    se_r2 = 2 * res.rms_displacement * res.stderr_rms
    assert abs(res.mean_square_displacement - 100.0) < 5 * se_r2
    # determinism across thread counts
    again = s.estimate_rms(spec, threads=4)
    assert again.rms_displacement == res.rms_displacement


def test_rms_stretch_and_universe(table):
    assert s.rms_stretch(10.0, 4.0) == 5.0
    ratio = s.universe_consistency(1e28, 1e80, table.particle("pion"), table.constants)
    assert abs(math.log10(ratio)) < 1.0


def test_nelson(table):
    k = table.constants
    pion = table.particle("pion")
    nu = s.diffusion_constant(pion, k, s.DiffusionConvention.paper)
    assert rel_err(nu, s.compton_wavelength(pion, k) * k.c) < 1e-12
    assert rel_err(
        s.increment_scale(nu, s.compton_time(pion, k)), s.compton_wavelength(pion, k)
    ) < 1e-12

    model = s.QuantumModel.harmonic(1.0)
    spec = s.DiffusionSpec()
    spec.nu = 0.5
    spec.dt = 0.01
    spec.t_end = 10.0
    spec.walkers = 5000
    spec.seed = 7
    ens = s.evolve_ensemble(model, spec, threads=2)
    assert len(ens.positions) == 5000
    var = sum(x * x for x in ens.positions) / 5000
    assert abs(var - 0.5) < 5 * 0.5 * math.sqrt(2 / 4999)
    rep = s.density_distance(ens, model)
    assert not rep.degenerate
    assert rep.l1 < 0.2


def test_dirac(table):
    f = s.gaussian_packet(256, 0.25, 0.0, 4.0, 0.0)
    assert rel_err(f.norm(), 1.0) < 1e-12
    evolved, diag = s.spectral_evolve(f, 1.0, 3.0)
    assert abs(evolved.norm() - 1.0) < 1e-12
    assert not diag.aliasing

    rest = s.eq2_mean_position(0.0, 1.0, 1.0)
    assert rest.classical == 0.0
    assert rel_err(rest.amplitude, 0.5) < 1e-12
    assert rel_err(rest.frequency, 2.0) < 1e-12

    cgs = s.QUnits(table.constants.hbar, table.constants.c)
    e_rest = s.eq2_mean_position(0.0, table.particle("electron").mass, 0.0, cgs)
    assert rel_err(e_rest.amplitude, 1.9316131e-11) < 1e-6

    window = 15 * math.pi
    times = [window * i / 480 for i in range(480)]
    series = s.mean_position_series(f, 1.0, times)
    rep = s.zitter_analyze(series, times)
    assert abs(rep.dominant_frequency - 2.0) <= 2 * math.pi / window + 1e-12
    assert rep.oscillation_amplitude <= 0.55


def test_checkerboard_massless_translation():
    f = s.gaussian_packet(128, 0.25, 0.0, 1.0, 0.0)
    lat = s.LatticeSpec()
    lat.dx = 0.25
    lat.points = 128
    lat.steps = 16
    moved, diag = s.checkerboard_propagate(f, lat, 0.0)
    assert not diag.boundary_contact
    assert moved.up[16 + 64] == f.up[64]


def test_kerr_newman(table):
    cfg = s.particle_kn_config(table.particle("electron"), table.constants)
    cls = s.kn_classify(cfg, table.constants)
    assert cls.kind == s.KNKind.naked_singularity
    assert cls.b is not None
    assert 0.99 < s.electron_kn_check(table) < 1.01

    sun = s.KNConfig(2e33)
    schw = s.kn_classify(sun, table.constants)
    assert schw.kind == s.KNKind.black_hole
    rg = table.constants.G * 2e33 / table.constants.c**2
    assert rel_err(schw.r_plus, 2 * rg) < 1e-12


def test_cosmology(table):
    spec = s.CosmologySpec()
    spec.N0 = 1.0
    spec.tau = 1.0
    spec.t_end = 100.0
    spec.dt = 1.0
    traj = s.integrate_population(spec)
    assert traj.monotone
    for t, n in zip(traj.times, traj.N_values):
        assert rel_err(n, s.population_closed_form(1.0, 1.0, t)) < 1e-6

    scales = s.derived_scales(1e80, table.particle("pion"), table.constants)
    assert rel_err(scales.radius, 1.4143942e27) < 1e-6
    assert rel_err(scales.hubble, 2.1196354e-17) < 1e-6
    m = s.pion_hubble_mass(scales.hubble, table.constants)
    assert abs(math.log10(m / 2.488e-25)) < 1.0


def test_audit(table):
    inputs = s.AuditInputs()
    inputs.R = 1e28
    inputs.N = 1e80
    inputs.T_obs = 4e17
    inputs.M_obs = 1e56
    rows = s.large_number_audit(inputs, table.particle("pion"), table.constants)
    assert len(rows) == 5
    assert all(abs(r.residual_dex) <= 1.5 for r in rows)
    assert all(r.pass_ for r in rows)


def test_error_paths(table):
    bad = s.Particle("ghost", -1.0)
    with pytest.raises(Exception):
        s.compton_wavelength(bad, table.constants)
    with pytest.raises(Exception):
        s.rms_stretch(1.0, 0.0)
    with pytest.raises(Exception):
        s.creation_rate(-1.0, 1.0)
