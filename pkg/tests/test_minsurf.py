"""
Tests voor de catalogus van vrije-rand minimale oppervlakken
"""
import math

import numpy as np
import pandas as pd
import pytest

from modules.fouten import InvoerFout, KwadratuurFout
from modules.minsurf import (
    CriticalKind,
    adaptive,
    catalog_surface,
    catenoid_pencil_check,
    catenoid_surface,
    cone_surface,
    critical_catenoid_density,
    geometry_checks,
    harmonicity_residual,
    integrate_1d,
    integrate_2d,
    latitude_circle,
    mobius_surface,
    sample_surface_csv,
    solve_critical_parameter,
    verify_free_boundary,
)


def test_kritieke_parameters():
    T0 = solve_critical_parameter(CriticalKind.CATENOID)
    assert T0 == pytest.approx(1.19967864, abs=1e-8)
    assert T0 == pytest.approx(1.0 / math.tanh(T0), abs=1e-11)
    T_mobius = solve_critical_parameter("mobius")
    assert T_mobius == pytest.approx(math.atanh(1.0 / math.sqrt(3.0)), abs=1e-10)


def test_kritieke_dichtheid_is_een_gedeeld_door_T0(T0):
    assert critical_catenoid_density() == pytest.approx(1.0 / T0, rel=1e-10)


def test_equatoriale_schijf():
    schijf = catalog_surface("equatorial_disk")
    rapport = verify_free_boundary(schijf, 32)
    assert rapport.harmonicity_residual <= 1e-12
    assert rapport.boundary_condition_residual <= 1e-12
    assert rapport.sphere_residual <= 1e-12
    assert rapport.area == pytest.approx(math.pi, rel=1e-12)
    assert rapport.boundary_length == pytest.approx(2 * math.pi, rel=1e-12)


@pytest.mark.parametrize("naam", ["critical_catenoid", "critical_mobius", "cone_over_great_circle"])
def test_kritieke_oppervlakken_voldoen_aan_vrije_rand(naam):
    oppervlak = catalog_surface(naam)
    rapport = verify_free_boundary(oppervlak, 64, "analytic")
    assert rapport.harmonicity_residual <= 1e-8
    assert rapport.sphere_residual <= 1e-10
    assert rapport.boundary_condition_residual <= 1e-6
    controles = geometry_checks(oppervlak, rapport.area, rapport.boundary_length)
    assert all(c["pass"] for c in controles), controles


def test_kegelnormaal_en_tweede_fundamentaalvorm():
    r, theta = np.array([0.25, 0.5, 1.0]), np.array([0.3, 1.1, 2.0])
    kegel = catalog_surface("cone_over_great_circle")
    np.testing.assert_allclose(np.abs(kegel.unit_normal(r, theta)), [[0.0, 0.0, 1.0]] * 3, atol=1e-14)
    np.testing.assert_allclose(kegel.second_fundamental_norm2(r, theta), 0.0, atol=1e-14)

    # kegel over een breedtecirkel op hoogte h: |A|² = h² / (r²(1 − h²))
    breedtekegel = cone_surface(latitude_circle(0.5))
    normaal = breedtekegel.unit_normal(r, theta)
    np.testing.assert_allclose(np.sum(normaal * breedtekegel.d_s(r, theta), axis=-1), 0.0, atol=1e-14)
    np.testing.assert_allclose(np.sum(normaal * breedtekegel.d_theta(r, theta), axis=-1), 0.0, atol=1e-14)
    np.testing.assert_allclose(breedtekegel.second_fundamental_norm2(r, theta), 0.25 / (r ** 2 * 0.75), rtol=1e-12)


def test_differenties_benaderen_analytische_laplace():
    catenoide = catalog_surface("critical_catenoid")
    assert harmonicity_residual(catenoide, 64, "fd") <= 1e-2
    with pytest.raises(InvoerFout):
        harmonicity_residual(catenoide, 64, "spectraal")


def test_verkeerde_afkapping_schendt_randvoorwaarde():
    rapport = verify_free_boundary(catenoid_surface(1.0), 32)
    assert rapport.harmonicity_residual <= 1e-8
    assert rapport.sphere_residual <= 1e-10
    assert rapport.boundary_condition_residual > 1e-3

    rapport = verify_free_boundary(mobius_surface(1.0), 32)
    assert rapport.boundary_condition_residual > 1e-3


def test_ongeldige_invoer():
    with pytest.raises(InvoerFout):
        verify_free_boundary(catalog_surface("equatorial_disk"), 4)
    with pytest.raises(InvoerFout):
        catalog_surface("helicoide")
    with pytest.raises(InvoerFout):
        catenoid_surface(0.0)
    with pytest.raises(InvoerFout):
        latitude_circle(1.0)


def test_catenoide_in_de_dtn_bundel():
    resultaat = catenoid_pencil_check(resolution=8)
    assert len(resultaat["rayleigh"]) == 3
    assert resultaat["afwijking"] < 2e-2


def test_gauss_legendre_is_exact_voor_veeltermen():
    assert integrate_1d(lambda x: x ** 7 - 3 * x ** 2, 0.0, 2.0, 4) == pytest.approx(32.0 - 8.0, rel=1e-13)
    waarde = integrate_2d(lambda s, t: s * s * np.cos(t) ** 2, (0.0, 1.0), (0.0, 2 * math.pi), 32)
    assert waarde == pytest.approx(math.pi / 3, rel=1e-12)


def test_adaptieve_kwadratuur_faalt_zonder_convergentie():
    with pytest.raises(KwadratuurFout):
        adaptive(lambda orde: float(orde), startorde=2, maxorde=8, tolerantie=1e-12, divergentie=1e-3)


def test_bemonstering_naar_csv(tmp_path):
    pad = tmp_path / "catenoide.csv"
    sample_surface_csv(catalog_surface("critical_catenoid"), 8, pad)
    frame = pd.read_csv(pad)
    assert list(frame.columns) == ["t", "theta", "x1", "x2", "x3"]
    assert len(frame) == 9 * 8
    straal = np.linalg.norm(frame[["x1", "x2", "x3"]].to_numpy()[frame["t"].abs().idxmax()])
    assert straal == pytest.approx(1.0, abs=1e-10)
