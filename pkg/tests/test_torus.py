"""
Tests voor de eerste Laplace-eigenwaarde van vlakke tori
"""
import math

import numpy as np
import pytest

from modules.fouten import InvoerFout, OptimalisatieFout
from modules.optimize import (
    Lattice,
    flat_torus_lambda1,
    lambda1_multiplicity,
    laplace_derivative_flat_torus,
    scan_flat_tori,
    shortest_dual_vectors,
)


def test_vierkante_torus():
    rooster = Lattice.square()
    assert flat_torus_lambda1(rooster) == pytest.approx(4 * math.pi ** 2, rel=1e-12)
    assert lambda1_multiplicity(rooster) == 4


def test_ruit_torus_is_maximaal():
    ruit = Lattice.rhombic(60.0)
    waarde = flat_torus_lambda1(ruit)
    assert waarde == pytest.approx(8 * math.pi ** 2 / math.sqrt(3.0), rel=1e-12)
    assert lambda1_multiplicity(ruit) == 6
    assert waarde > flat_torus_lambda1(Lattice.square())
    assert waarde <= 16 * math.pi


def test_genormaliseerde_waarde_is_schaalinvariant():
    rooster = Lattice.from_shape(0.3, 1.7)
    assert flat_torus_lambda1(rooster.scaled(2.5)) == pytest.approx(flat_torus_lambda1(rooster), rel=1e-12)


def test_kortste_duale_vector_na_basiswissel():
    # zelfde rooster als het vierkant, scheve basis
    lengte, vectoren = shortest_dual_vectors(Lattice((1.0, 0.0), (7.0, 1.0)))
    assert lengte == pytest.approx(1.0, rel=1e-12)
    assert len(vectoren) == 4


@pytest.mark.parametrize("seed", range(5))
def test_afgeleide_langs_constante_variatie(seed):
    rng = np.random.default_rng(seed)
    a = rng.standard_normal((2, 2))
    afgeleide = laplace_derivative_flat_torus(Lattice.from_shape(0.3, 1.7), a + a.T)
    assert afgeleide.relative_error <= 1e-10


def test_afgeleide_vereist_enkelvoudige_eigenwaarde():
    with pytest.raises(OptimalisatieFout):
        laplace_derivative_flat_torus(Lattice.square(), np.eye(2))


def test_afgeleide_vereist_symmetrische_h():
    with pytest.raises(InvoerFout):
        laplace_derivative_flat_torus(Lattice.from_shape(0.3, 1.7), np.array([[1.0, 0.5], [0.0, 1.0]]))


@pytest.mark.parametrize("a, b", [((1.0, 0.0), (2.0, 0.0)), ((0.0, 1.0), (1.0, 0.0))])
def test_ongeldige_roosters(a, b):
    with pytest.raises(InvoerFout):
        Lattice(a, b)


def test_scan_van_roostervormen():
    xs = np.linspace(0.0, 0.5, 6)
    ys = np.linspace(math.sqrt(3.0) / 2, 2.0, 6)
    frame = scan_flat_tori(xs, ys)
    assert list(frame.columns) == ["x", "y", "lambda1A", "multiplicity"]
    assert len(frame) == 36
    assert frame["lambda1A"].max() <= 8 * math.pi ** 2 / math.sqrt(3.0) * (1 + 1e-12)
    assert frame["lambda1A"].max() == pytest.approx(8 * math.pi ** 2 / math.sqrt(3.0), rel=1e-12)
