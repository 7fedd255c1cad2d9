"""
Tests voor de experimentlaag: actieregister, workflow, rapport en commandoregel
"""
import json
import math
import sys
from types import SimpleNamespace

import pandas as pd
import pytest

from modules import __version__
from modules.actions import BESCHIKBARE_ACTIES, voerActieUit
from modules.experiment import (
    EXIT_CHECK_GEFAALD,
    EXIT_GEBRUIKSFOUT,
    EXIT_GESLAAGD,
    ExperimentConfig,
    run,
)
from modules.fouten import InvoerFout
from modules.helpers import parseer_parameters
from modules.workflow import Workflow


def _lees_rapport(map_):
    with open(map_ / "report.json", encoding="utf-8") as f:
        return json.load(f)


def test_register_bevat_alle_experimenten():
    assert set(BESCHIKBARE_ACTIES) == {"spectrum", "catalog-verify", "conformal-verify", "optimize-modulus",
                                       "optimize-density", "torus-scan", "bounds"}


def test_onbekend_experiment(tmp_path):
    assert run(ExperimentConfig("bestaat-niet", output=str(tmp_path))) == EXIT_GEBRUIKSFOUT
    assert not voerActieUit("bestaat-niet", {}).succes


def test_onbekende_parameter(tmp_path):
    config = ExperimentConfig("spectrum", {"domein": "disk"}, output=str(tmp_path))
    assert run(config) == EXIT_GEBRUIKSFOUT
    assert not (tmp_path / "report.json").exists()


def test_catalogusverificatie_schijf(tmp_path):
    config = ExperimentConfig("catalog-verify", {"surface": "equatorial_disk"}, output=str(tmp_path))
    assert run(config) == EXIT_GESLAAGD
    rapport = _lees_rapport(tmp_path)
    assert rapport["version"] == __version__
    assert rapport["success"]
    assert rapport["config"]["experiment"] == "catalog-verify"
    assert {"harmoniciteit", "op_de_bol", "conormaal_gelijk_aan_positie"} <= {c["check"] for c in rapport["checks"]}
    assert (tmp_path / "data" / "oppervlak.csv").exists()


def test_modulusoptimalisatie_annulus(tmp_path):
    config = ExperimentConfig("optimize-modulus", {"family": "annulus"}, output=str(tmp_path))
    assert run(config) == EXIT_GESLAAGD
    rapport = _lees_rapport(tmp_path)
    waarde = next(c for c in rapport["checks"] if c["check"] == "maximale_waarde")
    assert waarde["lhs"] == pytest.approx(10.4748, abs=1e-4)
    scan = pd.read_csv(tmp_path / "data" / "modulus_annulus.csv")
    assert scan["sigma1L"].max() <= waarde["lhs"] + 1e-9


def test_modulus_buiten_kritiek_punt_faalt(tmp_path):
    config = ExperimentConfig("optimize-modulus", {"family": "annulus", "T_min": 0.5, "T_max": 1.0},
                              output=str(tmp_path))
    assert run(config) == EXIT_CHECK_GEFAALD
    rapport = _lees_rapport(tmp_path)
    assert not rapport["success"]


def _certificaatcheck(map_):
    return next(c for c in _lees_rapport(map_)["checks"] if c["check"] == "sferisch_certificaat")


def test_certificaat_is_eis_in_het_extremum(tmp_path):
    config = ExperimentConfig("optimize-density", {"perturbation": 0.0, "resolution": 16, "iterations": 5},
                              seed=7, output=str(tmp_path))
    assert run(config) == EXIT_GESLAAGD
    check = _certificaatcheck(tmp_path)
    assert not check["evidence_only"]
    assert check["pass"]
    assert check["lhs"] <= 1e-6


def test_gefaald_certificaat_in_het_extremum_faalt_de_run(tmp_path, monkeypatch):
    from modules.actions import optimalisatie

    echt = optimalisatie.spherical_certificate

    def zwak_certificaat(*args, **kwargs):
        certificaat = echt(*args, **kwargs)
        return SimpleNamespace(residual=1e-3, maps=certificaat.maps)

    monkeypatch.setattr(optimalisatie, "spherical_certificate", zwak_certificaat)
    config = ExperimentConfig("optimize-density", {"perturbation": 0.0, "resolution": 16, "iterations": 5},
                              seed=7, output=str(tmp_path))
    assert run(config) == EXIT_CHECK_GEFAALD
    check = _certificaatcheck(tmp_path)
    assert not check["evidence_only"]
    assert not check["pass"]


def test_certificaat_buiten_het_extremum_is_alleen_bewijs(tmp_path):
    config = ExperimentConfig("optimize-density", {"T": 1.5, "resolution": 4, "iterations": 3},
                              seed=7, output=str(tmp_path))
    run(config)
    check = _certificaatcheck(tmp_path)
    assert check["evidence_only"]
    assert check["pass"]


def test_spectrum_schijf(tmp_path):
    config = ExperimentConfig("spectrum", {"domain": "disk", "resolution": 8}, output=str(tmp_path))
    assert run(config) == EXIT_GESLAAGD
    frame = pd.read_csv(tmp_path / "data" / "spectrum.csv")
    assert frame["eigenvalue"][1] == pytest.approx(1.0, rel=2e-2)


def test_spectrum_met_eigenfuncties(tmp_path):
    config = ExperimentConfig("spectrum", {"domain": "disk", "resolution": 8, "count": 3, "eigenfunctions": True},
                              output=str(tmp_path))
    assert run(config) == EXIT_GESLAAGD
    frame = pd.read_csv(tmp_path / "data" / "eigenfuncties.csv")
    assert list(frame.columns) == ["vertex", "x", "y", "u0", "u1", "u2"]
    assert "eigenfuncties" in _lees_rapport(tmp_path)["tables"]


@pytest.mark.parametrize("oppervlak", [
    "equatorial_disk",
    "cone_over_great_circle",
    pytest.param("critical_catenoid", marks=pytest.mark.traag),
    pytest.param("critical_mobius", marks=pytest.mark.traag),
])
def test_conforme_verificatie_voor_elk_catalogusoppervlak(tmp_path, oppervlak):
    config = ExperimentConfig("conformal-verify", {"surface": oppervlak, "samples": 20, "directions": 1},
                              seed=7, output=str(tmp_path))
    assert run(config) == EXIT_GESLAAGD
    rapport = _lees_rapport(tmp_path)
    assert rapport["success"]
    ids = {c["theorem_id"] for c in rapport["checks"]}
    assert {"randlengte_neemt_af", "tweede_variatie_randlengte", "eerste_variatie"} <= ids
    if oppervlak != "critical_mobius":
        assert "indexvorm" in ids


def test_workflow_voert_acties_in_volgorde_uit(rapport):
    workflow = Workflow("test")
    workflow.voegActieToe("optimize-modulus", {"label": "a", "family": "annulus"})
    workflow.voegActieToe("optimize-modulus", {"label": "m", "family": "mobius"})
    voortgang = []
    assert workflow.voerUit(lambda percentage, naam: voortgang.append(percentage))
    assert voortgang == [50.0, 100.0]
    assert all(r.geslaagd for r in workflow.haalResultaten())
    assert rapport.haalTabelOp("a_modulus_annulus") is not None
    assert rapport.haalTabelOp("m_modulus_mobius") is not None


def test_workflow_stopt_bij_fout(rapport):
    workflow = Workflow("fout")
    workflow.voegActieToe("optimize-modulus", {"family": "torus"})
    workflow.voegActieToe("optimize-modulus", {"family": "annulus"})
    assert not workflow.voerUit()
    assert len(workflow.haalResultaten()) == 1


def test_parameterparsing():
    assert parseer_parameters(["T=1.5", "resolution=8", "domain=mobius", "eigenfunctions=true"]) == {
        "T": 1.5, "resolution": 8, "domain": "mobius", "eigenfunctions": True}
    with pytest.raises(InvoerFout):
        parseer_parameters(["zonder_gelijkteken"])
    with pytest.raises(InvoerFout):
        parseer_parameters(["=1"])


def test_commandoregel(tmp_path, monkeypatch):
    # main leidt stdout/stderr om; herstel na de test
    monkeypatch.setattr(sys, "stdout", sys.stdout)
    monkeypatch.setattr(sys, "stderr", sys.stderr)
    monkeypatch.setattr(sys, "excepthook", sys.excepthook)
    import main

    assert main.main(["--experiment", "optimize-modulus", "--param", "family=mobius",
                      "--out", str(tmp_path)]) == EXIT_GESLAAGD
    rapport = _lees_rapport(tmp_path)
    waarde = next(c for c in rapport["checks"] if c["check"] == "maximale_waarde")
    assert waarde["lhs"] == pytest.approx(2 * math.pi * math.sqrt(3.0), rel=1e-8)

    assert main.main(["--experiment", "spectrum", "--param", "domain", "--out", str(tmp_path)]) == EXIT_GEBRUIKSFOUT
    with pytest.raises(SystemExit):
        main.maak_parser().parse_args(["--experiment", "onbekend"])
