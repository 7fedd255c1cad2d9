"""
Tests voor eigenwaardevariaties, modulus- en dichtheidsoptimalisatie, certificaten en grenzen
"""
import math
import os

import numpy as np
import pytest

from modules.fouten import InvoerFout
from modules.mesh import DomainKind, DomainSpec, generate_domain
from modules.minsurf import critical_catenoid, solve_critical_parameter
from modules.optimize import (
    BoundaryDensity,
    ConformalityData,
    MetricPerturbation,
    bound_checks,
    conformally_perturbed_metric,
    feasible,
    finite_difference_sigma,
    golden_section_max,
    gram_residual,
    maximize_density,
    maximize_over_modulus,
    mean_free,
    perturbed_metric,
    q_form_conformal,
    q_form_metric,
    scan_modulus,
    search_genus0,
    spherical_certificate,
    steklov_bound,
    stress_energy,
)
from modules.spectral import DiscreteMetric, assemble_operators, steklov_spectrum


@pytest.fixture(scope="module")
def eerste_paar(brede_annulus):
    """(metriek, u₁, σ₁) op de annulus met T = 1.5, waar σ₁ = 1/T enkelvoudig is"""
    metric = DiscreteMetric.euclidean(brede_annulus)
    spectrum = steklov_spectrum(brede_annulus, metric, 4)
    assert spectrum.multiplicity(1) == 1
    return metric, spectrum.functions[:, 1], float(spectrum.values[1])


@pytest.mark.parametrize("seed", range(20))
def test_q_h_is_afgeleide_van_sigma(brede_annulus, eerste_paar, seed):
    metric, u, sigma = eerste_paar
    h = MetricPerturbation.random(brede_annulus, metric, np.random.default_rng(seed))
    q = q_form_metric(brede_annulus, metric, u, sigma, h)
    fd = finite_difference_sigma(brede_annulus, lambda t: perturbed_metric(metric, h, t))
    assert abs(q - fd) <= 1e-4 * max(1.0, abs(fd))


def test_q_phi_is_afgeleide_van_sigma(brede_annulus, eerste_paar):
    metric, u, sigma = eerste_paar
    hoek = brede_annulus.dof_coordinates()[brede_annulus.boundary_dofs, 1]
    phi = mean_free(brede_annulus, metric, 0.5 * np.cos(hoek) + 0.3 * np.sin(2 * hoek)) + 0.2
    q = q_form_conformal(brede_annulus, metric, u, sigma, phi)
    fd = finite_difference_sigma(brede_annulus, lambda t: conformally_perturbed_metric(metric, phi, t))
    assert abs(q - fd) <= 1e-4 * max(1.0, abs(fd))


def test_schaalvariatie_geeft_min_halve_sigma(brede_annulus, eerste_paar):
    metric, u, sigma = eerste_paar
    q = q_form_metric(brede_annulus, metric, u, sigma, MetricPerturbation.conformal(brede_annulus, metric))
    assert q == pytest.approx(-0.5 * sigma, rel=1e-10)


def test_stress_energie_is_spoorloos(brede_annulus, eerste_paar, rng):
    metric, u, _ = eerste_paar
    A = 0.5 * rng.standard_normal((len(metric.tensors), 2, 2))
    scheef = np.einsum("fij,fkj->fik", A, A) + np.eye(2)
    tau = stress_energy(brede_annulus, DiscreteMetric(scheef, metric.boundary_density), u)
    assert tau.max_trace <= 1e-12 * max(1.0, float(np.max(np.abs(tau.tensors))))


def test_normalisatie_wordt_gecontroleerd(brede_annulus, eerste_paar):
    metric, u, sigma = eerste_paar
    with pytest.raises(InvoerFout):
        q_form_metric(brede_annulus, metric, 2 * u, sigma, MetricPerturbation.zero(brede_annulus))
    with pytest.raises(InvoerFout):
        stress_energy(brede_annulus, metric, u[:-1])


def test_modulus_annulus():
    T0 = solve_critical_parameter("catenoid")
    resultaat = maximize_over_modulus("annulus")
    T, waarde = resultaat
    assert not resultaat.boundary_maximum
    assert T == pytest.approx(T0, abs=1e-6)
    assert waarde == pytest.approx(4 * math.pi / T0, rel=1e-8)
    assert waarde == pytest.approx(10.4748, abs=1e-4)


def test_modulus_mobius():
    _, waarde = maximize_over_modulus("mobius")
    assert waarde == pytest.approx(2 * math.pi * math.sqrt(3.0), rel=1e-8)


def test_modulus_op_intervalrand():
    resultaat = maximize_over_modulus("annulus", bracket=(0.5, 1.0))
    assert resultaat.boundary_maximum
    assert resultaat.T_star == pytest.approx(1.0, abs=1e-6)


@pytest.mark.parametrize("bracket", [(2.0, 1.0), (-1.0, 1.0), (0.0, 2.0)])
def test_ongeldig_modulusinterval(bracket):
    with pytest.raises(InvoerFout):
        maximize_over_modulus("annulus", bracket=bracket)


def test_gulden_snede_evalueert_alleen_inwendig():
    geziene = []

    def parabool(x):
        geziene.append(x)
        return -(x - 1.0) ** 2

    x, waarde, _ = golden_section_max(parabool, 0.0, 3.0, 1e-9)
    assert x == pytest.approx(1.0, abs=1e-6)
    assert waarde == pytest.approx(0.0, abs=1e-12)
    assert all(0.0 < punt < 3.0 for punt in geziene)
    with pytest.raises(InvoerFout):
        golden_section_max(parabool, 1.0, 1.0, 1e-9)


def test_modulusscan():
    frame = scan_modulus("annulus", [0.5, 1.0, 2.0])
    assert list(frame.columns) == ["T", "sigma1L"]
    assert frame["sigma1L"][1] == pytest.approx(4 * math.pi * math.tanh(1.0))
    with pytest.raises(InvoerFout):
        scan_modulus("torus", [1.0])
    with pytest.raises(InvoerFout):
        scan_modulus("mobius", [0.0])


def test_uniforme_annulus_is_stationair(brede_annulus, tmp_path):
    rapport = maximize_density(brede_annulus, iterations=5, checkpoint_dir=str(tmp_path))
    assert rapport.stop_reason == "stationair"
    assert rapport.final_value == pytest.approx(4 * math.pi / 1.5, rel=1e-10)
    assert len(rapport.trajectory) == 1


def test_dichtheidsstijging_is_monotoon(schijf, tmp_path):
    hoek = np.arctan2(*schijf.dof_coordinates()[schijf.boundary_dofs][:, ::-1].T)
    start = BoundaryDensity.from_values(schijf, 1.0 + 0.2 * np.cos(2 * hoek))
    rapport = maximize_density(schijf, start, iterations=10, checkpoint_dir=str(tmp_path), checkpointinterval=5)
    assert rapport.is_monotone()
    assert rapport.final_value >= rapport.initial_value
    assert np.sum(rapport.final_density * start.weights) == pytest.approx(start.total_length, rel=1e-12)
    assert os.path.exists(tmp_path / "checkpoint_00005.json")
    assert list(rapport.trajectory_frame().columns) == ["iteration", "sigma1L"]


@pytest.mark.traag
def test_dichtheid_herstelt_schijfwaarde(schijf):
    hoek = np.arctan2(*schijf.dof_coordinates()[schijf.boundary_dofs][:, ::-1].T)
    start = BoundaryDensity.from_values(schijf, 1.0 + 0.2 * np.cos(2 * hoek))
    rapport = maximize_density(schijf, start, iterations=200)
    assert rapport.final_value == pytest.approx(2 * math.pi, rel=1e-2)


def test_dichtheid_moet_positief_zijn(schijf):
    with pytest.raises(InvoerFout):
        BoundaryDensity.from_values(schijf, np.zeros(len(schijf.boundary_dofs)))
    with pytest.raises(InvoerFout):
        maximize_density(schijf, np.ones(3), iterations=1)


@pytest.fixture(scope="module")
def kritieke_annulus():
    T0 = solve_critical_parameter("catenoid")
    mesh = generate_domain(DomainSpec(DomainKind.ANNULUS, modulus=T0, resolution=16))
    metric = DiscreteMetric.euclidean(mesh, np.full(len(mesh.boundary_dofs), 1.0 / T0))
    return mesh, metric


def test_sferisch_certificaat_catenoide(kritieke_annulus):
    mesh, metric = kritieke_annulus
    ops = assemble_operators(mesh, metric)
    spectrum = steklov_spectrum(mesh, metric, 4, ops=ops)
    np.testing.assert_allclose(spectrum.values[1:4], 1.0, rtol=1e-3)
    cluster = slice(1, 4)
    certificaat = spherical_certificate(
        spectrum.boundary_functions[:, cluster], ops.boundary_weights,
        conformality=ConformalityData(mesh, metric, spectrum.functions[:, cluster]),
    )
    assert certificaat.residual <= 1e-6
    assert certificaat.pointwise_error <= 1e-3
    kaart = mesh.dof_coordinates()[mesh.boundary_dofs]
    catenoide = critical_catenoid().point(kaart[:, 0], kaart[:, 1])
    # P1-vloer bij resolutie 16: 1.57e-3
    assert gram_residual(certificaat.maps, catenoide) <= 2e-3


def test_sferisch_certificaat_faalt_buiten_extremum(kritieke_annulus):
    mesh, metric = kritieke_annulus
    hoek = mesh.dof_coordinates()[mesh.boundary_dofs, 1]
    verstoord = metric.with_density(metric.boundary_density * (1.0 + 0.3 * np.cos(2 * hoek)))
    ops = assemble_operators(mesh, verstoord)
    spectrum = steklov_spectrum(mesh, verstoord, 2, ops=ops)
    certificaat = spherical_certificate(spectrum.boundary_functions[:, 1:2], ops.boundary_weights)
    assert certificaat.residual >= 1e-3


@pytest.mark.parametrize("schaal", [1.0, 0.8])
def test_klein_residu_geeft_puntsgewijze_bol(kritieke_annulus, schaal):
    mesh, metric = kritieke_annulus
    metric = metric.with_density(schaal * metric.boundary_density)
    ops = assemble_operators(mesh, metric)
    spectrum = steklov_spectrum(mesh, metric, 4, ops=ops)
    certificaat = spherical_certificate(spectrum.boundary_functions[:, 1:4], ops.boundary_weights)
    assert certificaat.residual <= 1e-6
    assert certificaat.pointwise_error <= 1e-3
    assert np.max(np.abs(np.sum(certificaat.maps ** 2, axis=1) - 1.0)) == pytest.approx(certificaat.pointwise_error)


def test_certificaat_vereist_cluster():
    with pytest.raises(InvoerFout):
        spherical_certificate(np.zeros((10, 0)), np.ones(10))


def test_steklov_grenzen():
    assert steklov_bound(0, 1) == pytest.approx(2 * math.pi)
    assert steklov_bound(0, 2) == pytest.approx(4 * math.pi)
    assert steklov_bound(1, 3) == pytest.approx(8 * math.pi)


def test_grenscontroles():
    T0 = solve_critical_parameter("catenoid")
    rapport = bound_checks([
        {"run": "annulus", "gamma": 0, "k": 2, "sigma1L": 4 * math.pi / T0},
        {"run": "mobius", "gamma": 1, "k": 1, "sigma1L": 2 * math.pi * math.sqrt(3.0), "orientable": False},
        {"run": "vierkant", "gamma": 1, "lambda1A": 4 * math.pi ** 2},
    ])
    assert rapport.passed
    assert [c["check"] for c in rapport.checks] == ["steklov_grens", "geslacht_nul",
                                                    "steklov_niet_orienteerbaar", "yang_yau"]
    assert rapport.checks[2]["evidence_only"]


def test_grensovertreding_wordt_gemeld():
    rapport = bound_checks([{"run": "te_groot", "gamma": 0, "k": 2, "sigma1L": 13.0}])
    assert not rapport.passed
    assert {c["check"] for c in rapport.failures} == {"steklov_grens", "geslacht_nul"}
    with pytest.raises(InvoerFout):
        bound_checks([{"run": "leeg"}])


def test_toelaatbare_gatgeometrie():
    assert feasible(3, 0.5, 0.15)
    assert not feasible(3, 0.9, 0.2)
    assert not feasible(4, 0.2, 0.15)
    assert not feasible(3, 0.5, 0.01)


def test_zoektocht_wijst_ontoelaatbare_start_af():
    with pytest.raises(InvoerFout):
        search_genus0(3, start=(0.9, 0.2))
    with pytest.raises(InvoerFout):
        search_genus0(1)


@pytest.mark.traag
def test_zoektocht_geslacht_nul():
    rapport = search_genus0(3, resolution=3, outer_evaluations=4, inner_iterations=3)
    assert rapport.evaluations >= 1
    assert rapport.is_monotone()
    assert 0 < rapport.best_value < 4 * math.pi
