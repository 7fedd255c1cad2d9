"""
Uniforme verfijning van driehoeksnetten (1 → 4)
"""
import numpy as np

from modules.fouten import MeshFout
from modules.logger import logger
from modules.mesh.trimesh import DomainKind, TriangleMesh


def _cirkels(mesh):
    """Randcirkels (middelpunt, straal) waarop randpunten moeten blijven liggen"""
    if mesh.kind == DomainKind.DISK:
        return [((0.0, 0.0), 1.0)]
    if mesh.kind == DomainKind.GENUS0_HOLES:
        return [((0.0, 0.0), 1.0)] + [tuple(g) for g in mesh.holes]
    return []


def _projecteer(punt, a, b, cirkels, tolerantie=1e-9):
    """Projecteer een randmiddelpunt terug op de cirkel waarop beide eindpunten liggen"""
    for c, r in cirkels:
        c = np.asarray(c, dtype=float)
        if abs(np.linalg.norm(a - c) - r) < tolerantie and abs(np.linalg.norm(b - c) - r) < tolerantie:
            richting = punt - c
            return c + r * richting / np.linalg.norm(richting)
    return punt


def refine(mesh):
    """
    Splits elke driehoek in vier via de zijdemiddens

    Nieuwe randpunten op een gebogen rand worden op de cirkel geprojecteerd.
    Een naadzijde krijgt een middelpunt dat aan het middelpunt van de canonieke
    zijde wordt gekoppeld, zodat de identificatie behouden blijft.

    Args:
        mesh (TriangleMesh): Geldig net

    Returns:
        TriangleMesh: Verfijnd net met hetzelfde type en dezelfde topologie
    """
    vertices = [tuple(p) for p in mesh.vertices]
    middens = {}

    def midden(a, b):
        sleutel = (min(a, b), max(a, b))
        if sleutel not in middens:
            middens[sleutel] = len(vertices)
            vertices.append(tuple(0.5 * (mesh.vertices[a] + mesh.vertices[b])))
        return middens[sleutel]

    nieuwe_driehoeken = []
    for a, b, c in mesh.triangles.tolist():
        ab, bc, ca = midden(a, b), midden(b, c), midden(c, a)
        nieuwe_driehoeken.extend([
            (a, ab, ca),
            (ab, b, bc),
            (ca, bc, c),
            (ab, bc, ca),
        ])

    vertices = np.array(vertices)

    # Nieuwe randpunten terug op de gebogen rand
    cirkels = _cirkels(mesh)
    if cirkels:
        _, kaartparen = mesh.boundary_edges
        for a, b in kaartparen.tolist():
            m = middens[(min(a, b), max(a, b))]
            vertices[m] = _projecteer(vertices[m], mesh.vertices[a], mesh.vertices[b], cirkels)

    # Naad uitbreiden naar de middelpunten van naadzijden
    naad = dict(mesh.seam)
    nieuwe_naad = list(mesh.seam)
    for (a, b), m in middens.items():
        if a in naad and b in naad:
            canoniek = (min(naad[a], naad[b]), max(naad[a], naad[b]))
            if canoniek not in middens:
                raise MeshFout("Naadzijde heeft geen canonieke tegenhanger", zijde=(a, b))
            nieuwe_naad.append((m, middens[canoniek]))

    verfijnd = TriangleMesh(
        vertices,
        np.array(nieuwe_driehoeken, dtype=np.int64),
        seam=nieuwe_naad,
        kind=mesh.kind,
        modulus=mesh.modulus,
        holes=mesh.holes,
        orientable=mesh.orientable,
        resolution=2 * mesh.resolution,
    )
    logger.logActie(f"Net verfijnd: {len(mesh.triangles)} → {len(verfijnd.triangles)} driehoeken")
    return verfijnd
