"""
Tests voor de DtN-assemblage en de Steklov-eigenwaarden
"""
import math

import numpy as np
import pytest

from modules.fouten import InvoerFout, SpectraalFout
from modules.mesh import DomainKind, DomainSpec, generate_domain
from modules.spectral import (
    DiscreteMetric,
    annulus_exact_spectrum,
    assemble_operators,
    dtn_matrix,
    group_multiplicities,
    harmonic_extension,
    mobius_exact_spectrum,
    normalized_sigma,
    steklov_spectrum,
)

# Schijf: σ = 0, 1, 1, 2, 2, 3, 3
SCHIJF_EXACT = np.array([0.0, 1.0, 1.0, 2.0, 2.0, 3.0, 3.0])


def _spectrum(mesh, count):
    return steklov_spectrum(mesh, DiscreteMetric.euclidean(mesh), count)


def test_schijf_spectrum(fijne_schijf):
    spectrum = _spectrum(fijne_schijf, 7)
    assert spectrum.values[0] == pytest.approx(0.0, abs=1e-10)
    np.testing.assert_allclose(spectrum.values[1:], SCHIJF_EXACT[1:], rtol=2e-2)
    assert spectrum.multiplicity(1) == 2
    assert list(spectrum.cluster(1)) == [1, 2]
    assert spectrum.multiplicity(3) == 2


def _fout_sigma1(mesh, exact):
    return abs(_spectrum(mesh, 2).values[1] - exact)


def test_schijf_convergeert_kwadratisch(schijf):
    grof = generate_domain(DomainSpec(DomainKind.DISK, resolution=4))
    verhouding = _fout_sigma1(grof, 1.0) / _fout_sigma1(schijf, 1.0)
    assert verhouding >= 3.0


def test_annulus_convergeert_kwadratisch(annulus):
    # 4 → 8 is nog niet asymptotisch op de annulus
    fijn = generate_domain(DomainSpec(DomainKind.ANNULUS, modulus=1.0, resolution=16))
    exact = float(annulus_exact_spectrum(1.0, n_max=2).values[1])
    verhouding = _fout_sigma1(annulus, exact) / _fout_sigma1(fijn, exact)
    assert verhouding >= 3.0


def test_schijf_genormaliseerd_bij_twee_pi(fijne_schijf):
    spectrum = _spectrum(fijne_schijf, 3)
    waarde = normalized_sigma(spectrum, spectrum.boundary_length, 1)
    assert waarde == pytest.approx(2 * math.pi, rel=2e-2)
    with pytest.raises(InvoerFout):
        normalized_sigma(spectrum, spectrum.boundary_length, 3)
    with pytest.raises(InvoerFout):
        normalized_sigma(spectrum, 0.0, 1)


def test_annulus_tegen_exacte_waarden(annulus):
    spectrum = _spectrum(annulus, 10)
    exact = annulus_exact_spectrum(1.0, n_max=10)
    assert spectrum.boundary_length == pytest.approx(4 * math.pi, rel=1e-12)
    assert spectrum.values[0] == pytest.approx(0.0, abs=1e-10)
    np.testing.assert_allclose(spectrum.values[1:], exact.values[1:10], rtol=1.5e-2)


def test_mobius_tegen_exacte_waarden(mobius):
    spectrum = _spectrum(mobius, 5)
    exact = mobius_exact_spectrum(1.0, n_max=5)
    assert spectrum.boundary_length == pytest.approx(2 * math.pi, rel=1e-12)
    np.testing.assert_allclose(spectrum.values[1:], exact.values[1:5], rtol=1.5e-2)


def test_te_veel_eigenwaarden(schijf):
    with pytest.raises(InvoerFout):
        _spectrum(schijf, len(schijf.boundary_dofs) + 1)
    with pytest.raises(InvoerFout):
        _spectrum(schijf, 0)


def test_dtn_annuleert_constanten(schijf):
    D = dtn_matrix(assemble_operators(schijf, DiscreteMetric.euclidean(schijf)))
    np.testing.assert_allclose(D @ np.ones(D.shape[0]), 0.0, atol=1e-10)
    np.testing.assert_allclose(D, D.T, atol=1e-12)


def test_lineaire_functie_is_discreet_harmonisch(schijf):
    ops = assemble_operators(schijf, DiscreteMetric.euclidean(schijf))
    x = schijf.dof_coordinates()[:, 0]
    uitgebreid = harmonic_extension(ops, x[schijf.boundary_dofs])
    np.testing.assert_allclose(uitgebreid, x, atol=1e-10)


def test_eigenfuncties_orthonormaal_in_randmassa(annulus):
    metric = DiscreteMetric.euclidean(annulus)
    ops = assemble_operators(annulus, metric)
    spectrum = steklov_spectrum(annulus, metric, 6, ops=ops)
    phi = spectrum.boundary_functions
    gram = phi.T @ (ops.boundary_weights[:, None] * phi)
    np.testing.assert_allclose(gram, np.eye(6), atol=1e-10)


def test_schaling_van_de_metriek(schijf):
    metric = DiscreteMetric.euclidean(schijf)
    basis = steklov_spectrum(schijf, metric, 4).values
    dubbele_rand = steklov_spectrum(schijf, metric.scaled(boundary=2.0), 4).values
    conform = steklov_spectrum(schijf, metric.scaled(interior=3.0), 4).values
    np.testing.assert_allclose(dubbele_rand[1:], basis[1:] / 2.0, rtol=1e-10)
    np.testing.assert_allclose(conform[1:], basis[1:], rtol=1e-10)


def test_metriekvalidatie(schijf):
    metric = DiscreteMetric.euclidean(schijf)
    with pytest.raises(InvoerFout):
        metric.with_density(-np.ones(len(schijf.boundary_dofs))).validate(schijf)
    with pytest.raises(InvoerFout):
        metric.with_density(np.ones(3)).validate(schijf)
    tensoren = np.array(metric.tensors)
    tensoren[5] = [[1.0, 2.0], [2.0, 1.0]]
    with pytest.raises(SpectraalFout) as fout:
        DiscreteMetric(tensoren, metric.boundary_density).validate(schijf)
    assert fout.value.context["driehoek"] == 5


def test_groepering_van_multipliciteiten():
    groepen = group_multiplicities([0.0, 1e-13, 1.0, 1.0 + 1e-9, 2.0], 1e-6)
    assert list(groepen) == [0, 1, 2, 2, 3]
