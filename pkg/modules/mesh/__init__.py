"""
Mesh package: referentiedomeinen, verfijning, validatie en serialisatie
"""
from modules.mesh.trimesh import (
    BoundaryLoop,
    DomainKind,
    TriangleMesh,
    boundary_components,
    expected_topology,
    validate_mesh,
)
from modules.mesh.domain import DomainSpec, generate_domain, ring_holes
from modules.mesh.refine import refine
from modules.mesh.io import load_mesh, mesh_from_json, mesh_to_json, save_mesh


def euler_characteristic(mesh):
    """V − E + F op het quotiënt van het net"""
    return mesh.euler_characteristic()


__all__ = [
    "BoundaryLoop",
    "DomainKind",
    "DomainSpec",
    "TriangleMesh",
    "boundary_components",
    "euler_characteristic",
    "expected_topology",
    "generate_domain",
    "load_mesh",
    "mesh_from_json",
    "mesh_to_json",
    "refine",
    "ring_holes",
    "save_mesh",
    "validate_mesh",
]
