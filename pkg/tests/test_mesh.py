"""
Tests voor de referentiedomeinen, verfijning en serialisatie
"""
import json
import math

import numpy as np
import pytest

from modules.fouten import InvoerFout, MeshFout
from modules.mesh import (
    DomainKind,
    DomainSpec,
    TriangleMesh,
    boundary_components,
    euler_characteristic,
    generate_domain,
    load_mesh,
    mesh_from_json,
    mesh_to_json,
    refine,
    ring_holes,
    save_mesh,
    validate_mesh,
)


def test_schijf_topologie(schijf):
    samenvatting = validate_mesh(schijf)
    assert samenvatting["chi"] == 1
    assert samenvatting["lussen"] == 1
    assert len(schijf.boundary_dofs) == 6 * 8


def test_annulus_twee_randen_van_lengte_twee_pi(annulus):
    assert euler_characteristic(annulus) == 0
    lussen = boundary_components(annulus)
    assert len(lussen) == 2
    for lus in lussen:
        assert lus.chart_length == pytest.approx(2 * math.pi, rel=1e-12)


def test_mobius_een_rand_niet_orienteerbaar(mobius):
    assert not mobius.orientable
    assert euler_characteristic(mobius) == 0
    lussen = boundary_components(mobius)
    assert len(lussen) == 1
    assert lussen[0].chart_length == pytest.approx(2 * math.pi, rel=1e-12)


def test_gaten_geven_k_randcomponenten():
    mesh = generate_domain(DomainSpec(DomainKind.GENUS0_HOLES, holes=ring_holes(3, 0.5, 0.15), resolution=4))
    assert euler_characteristic(mesh) == -1
    assert len(boundary_components(mesh)) == 3


def test_ring_holes_met_een_gat_is_gecentreerd():
    assert ring_holes(2, 0.5, 0.3) == (((0.0, 0.0), 0.3),)


@pytest.mark.parametrize("spec", [
    DomainSpec("bol"),
    DomainSpec(DomainKind.DISK, resolution=0),
    DomainSpec(DomainKind.ANNULUS, modulus=0.0),
    DomainSpec(DomainKind.MOBIUS),
    DomainSpec(DomainKind.GENUS0_HOLES, holes=(((0.0, 0.0), -0.1),)),
    DomainSpec(DomainKind.GENUS0_HOLES, holes=(((0.9, 0.0), 0.2),)),
    DomainSpec(DomainKind.GENUS0_HOLES, holes=(((0.2, 0.0), 0.15), ((-0.05, 0.0), 0.15))),
])
def test_ongeldige_domeinen(spec):
    with pytest.raises(InvoerFout):
        generate_domain(spec)


def test_omgekeerde_driehoek_wordt_afgewezen(schijf):
    driehoeken = np.array(schijf.triangles)
    driehoeken[0] = driehoeken[0, ::-1]
    kapot = TriangleMesh(schijf.vertices, driehoeken, kind=DomainKind.DISK)
    with pytest.raises(MeshFout) as fout:
        validate_mesh(kapot)
    assert fout.value.context["driehoek"] == 0


def test_verfijnen_houdt_rand_op_de_cirkel():
    grof = generate_domain(DomainSpec(DomainKind.DISK, resolution=3))
    fijn = refine(grof)
    assert validate_mesh(fijn)["chi"] == 1
    assert len(fijn.triangles) == 4 * len(grof.triangles)
    straal = np.linalg.norm(fijn.dof_coordinates()[fijn.boundary_dofs], axis=1)
    np.testing.assert_allclose(straal, 1.0, atol=1e-12)


def test_verfijnen_behoudt_mobiusnaad():
    grof = generate_domain(DomainSpec(DomainKind.MOBIUS, modulus=0.5, resolution=2))
    fijn = refine(grof)
    samenvatting = validate_mesh(fijn)
    assert (samenvatting["chi"], samenvatting["lussen"]) == (0, 1)
    assert not fijn.orientable


def test_json_bewaart_net_exact(annulus, tmp_path):
    pad = tmp_path / "annulus.json"
    save_mesh(annulus, pad)
    terug = load_mesh(pad)
    assert terug.kind == DomainKind.ANNULUS
    assert terug.modulus == annulus.modulus
    assert terug.seam == annulus.seam
    np.testing.assert_array_equal(terug.vertices, annulus.vertices)
    np.testing.assert_array_equal(terug.triangles, annulus.triangles)


def test_json_onbekende_versie(schijf):
    document = json.loads(mesh_to_json(schijf))
    document["version"] = 99
    with pytest.raises(MeshFout):
        mesh_from_json(json.dumps(document))


def test_json_ongeldig_document():
    with pytest.raises(MeshFout):
        mesh_from_json("{geen json")
