"""
Tests voor de conforme afbeeldingen van de bal en de variationele controles
"""
import math

import numpy as np
import pytest

from modules.conformal import (
    BallConformalMap,
    apply_map,
    compose,
    conformality_residual,
    first_variation_identities,
    flow_map,
    great_circle,
    image_boundary_length,
    index_form_normal_direction,
    inverse,
    length_deficit_profile,
    magnification,
    magnification_from_exterior,
    mobius_add,
    random_ball_map,
    random_flow_suite,
    random_unit_vector,
    second_derivative_boundary_length,
    spherical_conformal_length,
)
from modules.fouten import ConformFout, InvoerFout
from modules.minsurf import catalog_surface

E3 = np.array([0.0, 0.0, 1.0])


def _punten_in_bal(rng, aantal, n=3, straal=0.9):
    richtingen = np.array([random_unit_vector(rng, n) for _ in range(aantal)])
    return richtingen * straal * rng.uniform(0.0, 1.0, size=(aantal, 1))


def test_mobius_optelling(rng):
    a = np.array([0.3, -0.2, 0.1])
    x = _punten_in_bal(rng, 20)
    np.testing.assert_allclose(mobius_add(a, np.zeros(3)), a, atol=1e-15)
    np.testing.assert_allclose(mobius_add(np.zeros(3), x), x, atol=1e-15)
    np.testing.assert_allclose(mobius_add(-a, mobius_add(a, x)), x, atol=1e-12)


def test_afbeelding_bewaart_de_bol(rng):
    f = random_ball_map(rng, 3)
    x = np.array([random_unit_vector(rng, 3) for _ in range(50)])
    np.testing.assert_allclose(np.linalg.norm(apply_map(f, x), axis=1), 1.0, atol=1e-12)


def test_samenstelling_met_inverse_is_identiteit(rng):
    f = random_ball_map(rng, 4)
    g = random_ball_map(rng, 4)
    x = _punten_in_bal(rng, 20, n=4)
    np.testing.assert_allclose(compose(f, inverse(f)).center, 0.0, atol=1e-12)
    np.testing.assert_allclose(compose(f, g)(x), f(g(x)), atol=1e-10)
    np.testing.assert_allclose(inverse(f)(f(x)), x, atol=1e-10)


def test_conformiteitscertificaat(rng):
    f = random_ball_map(rng, 3)
    residu = conformality_residual(f, _punten_in_bal(rng, 10))
    assert residu["jacobian_residual"] < 1e-6
    assert residu["magnification_error"] < 1e-6


def test_vergroting_via_buitenpunt(rng):
    f = BallConformalMap(np.array([0.4, 0.1, -0.3]), np.eye(3))
    x = np.array([random_unit_vector(rng, 3) for _ in range(30)])
    np.testing.assert_allclose(magnification_from_exterior(f, x), magnification(f, x), rtol=1e-12)


def test_ongeldige_afbeeldingen():
    with pytest.raises(ConformFout):
        BallConformalMap(np.array([1.0, 0.0, 0.0]), np.eye(3))
    with pytest.raises(ConformFout):
        BallConformalMap(np.zeros(3), 2 * np.eye(3))
    with pytest.raises(ConformFout):
        apply_map(BallConformalMap.identity(3), np.array([1.5, 0.0, 0.0]))
    with pytest.raises(InvoerFout):
        flow_map(np.array([1.0, 1.0, 0.0]), 0.3)


@pytest.mark.parametrize("t", [0.1, 0.5, 1.5])
def test_grootcirkel_krimpt_met_sech(t):
    lengte = spherical_conformal_length(great_circle(E3), flow_map(E3, t))
    assert lengte == pytest.approx(2 * math.pi / math.cosh(t), rel=1e-10)


def test_flowsuite_schijf():
    records = random_flow_suite(catalog_surface("equatorial_disk"), 200, seed=7)
    assert len(records) == 200
    assert all(r.passed for r in records)
    assert records[0].alsDict()["theorem_id"] == "randlengte_neemt_af"


@pytest.mark.traag
def test_flowsuite_kritieke_catenoide():
    records = random_flow_suite(catalog_surface("critical_catenoid"), 200, seed=7)
    assert len(records) == 200
    for record in records:
        assert record.lhs <= record.rhs + 1e-6
    assert all(r.passed for r in records)


def test_flowsuite_is_reproduceerbaar():
    schijf = catalog_surface("equatorial_disk")
    eerste = random_flow_suite(schijf, 5, seed=3)
    tweede = random_flow_suite(schijf, 5, seed=3)
    assert [r.parameters for r in eerste] == [r.parameters for r in tweede]


def test_tweede_variatie_schijf():
    schijf = catalog_surface("equatorial_disk")
    fd, formule = second_derivative_boundary_length(schijf, E3)
    assert formule == pytest.approx(-2 * math.pi, rel=1e-10)
    assert fd == pytest.approx(-2 * math.pi, rel=1e-3)


def test_indexvorm_schijf():
    q, formule = index_form_normal_direction(catalog_surface("equatorial_disk"), E3)
    assert formule == pytest.approx(-2 * math.pi, rel=1e-10)
    assert q == pytest.approx(formule, rel=1e-4)


@pytest.mark.parametrize("v", [E3, np.array([0.6, 0.0, 0.8])])
def test_indexvorm_kegel_over_grootcirkel(v):
    kegel = catalog_surface("cone_over_great_circle")
    q, formule = index_form_normal_direction(kegel, v)
    assert formule == pytest.approx(-2 * math.pi * v[2] ** 2, rel=1e-10)
    assert q == pytest.approx(formule, rel=1e-4)


def test_lengtetekort_schaalt_kwadratisch():
    profiel = length_deficit_profile(catalog_surface("equatorial_disk"), E3)
    assert all(rij["deficit"] > 0 for rij in profiel)
    # tekort ≈ π·t² voor de schijf
    assert profiel[-1]["ratio"] == pytest.approx(math.pi, rel=1e-3)


@pytest.mark.traag
def test_tweede_variatie_catenoide(rng):
    catenoide = catalog_surface("critical_catenoid")
    for v in [E3, random_unit_vector(rng, 3), random_unit_vector(rng, 3)]:
        fd, formule = second_derivative_boundary_length(catenoide, v)
        assert abs(fd - formule) <= 1e-3 * max(1.0, abs(formule))
        q, formule_q = index_form_normal_direction(catenoide, v)
        assert abs(q - formule_q) <= 1e-4 * max(1.0, abs(formule_q))


def test_eerste_variatie_schijf():
    resultaat = first_variation_identities(catalog_surface("equatorial_disk"), np.array([2.0, 0.0, 0.0]))
    assert resultaat["identity_residual"] <= 1e-10
    assert resultaat["min_divergence"] >= -1e-12
    assert resultaat["first_variation_gap"] <= 1e-5


def test_eerste_variatie_vereist_buitenpunt():
    with pytest.raises(ConformFout):
        first_variation_identities(catalog_surface("equatorial_disk"), np.array([0.5, 0.0, 0.0]))


def test_identiteit_bewaart_randlengte():
    schijf = catalog_surface("equatorial_disk")
    assert image_boundary_length(schijf, BallConformalMap.identity(3)) == pytest.approx(2 * math.pi, rel=1e-12)
