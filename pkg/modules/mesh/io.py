"""
JSON-serialisatie van driehoeksnetten
Het document is geversioneerd; floats worden via repr geschreven en komen bit-exact terug.
"""
import json

import numpy as np

from modules.fouten import MeshFout
from modules.mesh.trimesh import TriangleMesh

FORMAAT = "steklab-mesh"
VERSIE = 1


def mesh_to_dict(mesh):
    return {
        "format": FORMAAT,
        "version": VERSIE,
        "kind": mesh.kind.value,
        "modulus": mesh.modulus,
        "holes": [[list(c), r] for c, r in mesh.holes],
        "orientable": mesh.orientable,
        "resolution": mesh.resolution,
        "vertices": mesh.vertices.tolist(),
        "triangles": mesh.triangles.tolist(),
        "seam": [list(paar) for paar in mesh.seam],
    }


def mesh_from_dict(document):
    """
    Bouw een net uit een gedeserialiseerd document

    Raises:
        MeshFout: Bij een onbekend formaat of een niet-ondersteunde versie
    """
    if document.get("format") != FORMAAT:
        raise MeshFout("Onbekend netformaat", format=document.get("format"))
    if document.get("version") != VERSIE:
        raise MeshFout("Niet-ondersteunde netversie", version=document.get("version"), verwacht=VERSIE)
    return TriangleMesh(
        np.array(document["vertices"], dtype=float).reshape(-1, 2),
        np.array(document["triangles"], dtype=np.int64).reshape(-1, 3),
        seam=[tuple(paar) for paar in document.get("seam", [])],
        kind=document["kind"],
        modulus=document.get("modulus"),
        holes=tuple((tuple(c), r) for c, r in document.get("holes", [])),
        orientable=document.get("orientable", True),
        resolution=document.get("resolution", 0),
    )


def mesh_to_json(mesh):
    return json.dumps(mesh_to_dict(mesh))


def mesh_from_json(tekst):
    try:
        document = json.loads(tekst)
    except json.JSONDecodeError as e:
        raise MeshFout("Netdocument is geen geldige JSON", fout=str(e)) from e
    return mesh_from_dict(document)


def save_mesh(mesh, pad):
    with open(pad, "w", encoding="utf-8") as bestand:
        bestand.write(mesh_to_json(mesh))


def load_mesh(pad):
    with open(pad, "r", encoding="utf-8") as bestand:
        return mesh_from_json(bestand.read())
