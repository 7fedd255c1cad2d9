"""
Tests voor de exacte spectra en de CSV-export
"""
import math

import numpy as np
import pandas as pd
import pytest

from modules.fouten import InvoerFout
from modules.minsurf import CriticalKind, solve_critical_parameter
from modules.spectral import (
    DiscreteMetric,
    annulus_exact_spectrum,
    eigenfunction_frame,
    export_spectrum_csv,
    first_normalized_annulus,
    first_normalized_mobius,
    mobius_exact_spectrum,
    steklov_spectrum,
)


def test_annulus_eerste_waarden():
    spectrum = annulus_exact_spectrum(1.0)
    t, c = math.tanh(1.0), 1.0 / math.tanh(1.0)
    verwacht = [0.0, t, t, 1.0, c, c, 2 * math.tanh(2.0), 2 * math.tanh(2.0)]
    np.testing.assert_allclose(spectrum.values[:8], verwacht, rtol=1e-14)
    assert spectrum.labels[3] == "t"
    assert spectrum.boundary_length == pytest.approx(4 * math.pi)
    assert spectrum.multiplicity(1) == 2
    assert spectrum.multiplicity(3) == 1


def test_mobius_houdt_alleen_invariante_modi():
    spectrum = mobius_exact_spectrum(1.0, n_max=5)
    c = 1.0 / math.tanh(1.0)
    np.testing.assert_allclose(spectrum.values[:5], [0.0, c, c, 2 * math.tanh(2.0), 2 * math.tanh(2.0)],
                               rtol=1e-14)
    assert spectrum.boundary_length == pytest.approx(2 * math.pi)
    assert "t" not in spectrum.labels
    assert all(("sinh" in label) == (int(label[5]) % 2 == 1) for label in spectrum.labels[1:])


def test_kritieke_annulus_waarde():
    T0 = solve_critical_parameter(CriticalKind.CATENOID)
    assert first_normalized_annulus(T0) == pytest.approx(10.4748, abs=1e-4)
    assert first_normalized_annulus(T0) == pytest.approx(4 * math.pi / T0, rel=1e-12)


def test_kritieke_mobius_waarde():
    T0 = math.atanh(1.0 / math.sqrt(3.0))
    assert first_normalized_mobius(T0) == pytest.approx(2 * math.pi * math.sqrt(3.0), rel=1e-12)


@pytest.mark.parametrize("T", [0.0, -1.0])
def test_niet_positieve_modulus(T):
    with pytest.raises(InvoerFout):
        annulus_exact_spectrum(T)
    with pytest.raises(InvoerFout):
        mobius_exact_spectrum(T)


def test_spectrum_csv(tmp_path):
    pad = tmp_path / "spectrum.csv"
    export_spectrum_csv(annulus_exact_spectrum(1.0, n_max=2), pad)
    frame = pd.read_csv(pad)
    assert list(frame.columns) == ["index", "eigenvalue", "multiplicity_group", "mode"]
    assert frame["eigenvalue"][1] == pytest.approx(math.tanh(1.0), rel=1e-10)
    regel = pad.read_text(encoding="utf-8").splitlines()[2]
    assert regel.split(",")[1] == "%.11e" % math.tanh(1.0)


def test_eigenfunctie_tabel(schijf):
    spectrum = steklov_spectrum(schijf, DiscreteMetric.euclidean(schijf), 3)
    frame = eigenfunction_frame(spectrum, schijf)
    assert list(frame.columns) == ["vertex", "x", "y", "u0", "u1", "u2"]
    assert len(frame) == schijf.n_dof
    with pytest.raises(InvoerFout):
        eigenfunction_frame(annulus_exact_spectrum(1.0), schijf)
