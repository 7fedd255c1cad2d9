"""
Driehoeksnet voor Steklab
Stuksgewijs lineair oppervlak in kaartcoördinaten met optionele naadidentificatie.

Een naad (seam) koppelt dubbele kaartpunten aan hun canonieke punt. Zo blijft de
geometrie van elke driehoek in de kaart gewoon plat (geen omwikkeling in θ),
terwijl de assemblage geïdentificeerde punten als één vrijheidsgraad behandelt.
Het Möbiusquotiënt en de θ-periodiciteit van de annulus gebruiken allebei dit mechanisme.
"""
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

import numpy as np

from modules.fouten import MeshFout
from modules.logger import logger

DEGENERATIE_DREMPEL = 1e-12


class DomainKind(str, Enum):
    """Topologisch type van het referentiedomein"""
    DISK = "disk"
    ANNULUS = "annulus"
    MOBIUS = "mobius"
    GENUS0_HOLES = "genus0_holes"


@dataclass(frozen=True)
class BoundaryLoop:
    """Geordende cyclus van randpunten (canonieke punt-id's) met kaartlengte"""
    vertices: tuple
    dofs: tuple
    chart_length: float

    def __len__(self):
        return len(self.vertices)


@dataclass(frozen=True, eq=False)
class TriangleMesh:
    """
    Onveranderlijk driehoeksnet in kaartcoördinaten

    Attributes:
        vertices (ndarray): (V, 2) kaartcoördinaten
        triangles (ndarray): (F, 3) positief georiënteerde indextripels
        seam (tuple): paren (dubbel punt, canoniek punt)
        kind (DomainKind): topologisch type
        modulus (float): halve breedte T voor annulus/Möbius, anders None
        holes (tuple): ((cx, cy), r) per gat voor genus0_holes
        orientable (bool): False voor de Möbiusband
        resolution (int): resolutie waarmee het net is gemaakt
    """
    vertices: np.ndarray
    triangles: np.ndarray
    seam: tuple = ()
    kind: DomainKind = DomainKind.DISK
    modulus: float = None
    holes: tuple = ()
    orientable: bool = True
    resolution: int = 0

    def __post_init__(self):
        vertices = np.array(self.vertices, dtype=float)
        triangles = np.array(self.triangles, dtype=np.int64)
        if vertices.ndim != 2 or vertices.shape[1] != 2:
            raise MeshFout("Punten moeten (V, 2) kaartcoördinaten zijn", vorm=vertices.shape)
        if triangles.ndim != 2 or triangles.shape[1] != 3:
            raise MeshFout("Driehoeken moeten indextripels zijn", vorm=triangles.shape)
        if triangles.size and (triangles.min() < 0 or triangles.max() >= len(vertices)):
            raise MeshFout("Driehoeksindex buiten bereik", aantal_punten=len(vertices))
        vertices.setflags(write=False)
        triangles.setflags(write=False)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "triangles", triangles)
        object.__setattr__(self, "seam", tuple((int(a), int(b)) for a, b in self.seam))
        object.__setattr__(self, "kind", DomainKind(self.kind))

    # ------------------------------------------------------------------
    # Vrijheidsgraden
    # ------------------------------------------------------------------
    @cached_property
    def canonical(self):
        """Canoniek punt per kaartpunt (naad toegepast)"""
        canon = np.arange(len(self.vertices))
        for dubbel, canoniek in self.seam:
            canon[dubbel] = canoniek
        canon.setflags(write=False)
        return canon

    @cached_property
    def dof_vertices(self):
        """Canonieke punt-id per vrijheidsgraad, oplopend"""
        return np.unique(self.canonical)

    @cached_property
    def dof_of_vertex(self):
        """Vrijheidsgraad per kaartpunt"""
        return np.searchsorted(self.dof_vertices, self.canonical)

    @property
    def n_dof(self):
        return len(self.dof_vertices)

    @cached_property
    def triangle_dofs(self):
        return self.dof_of_vertex[self.triangles]

    # ------------------------------------------------------------------
    # Geometrie
    # ------------------------------------------------------------------
    @cached_property
    def signed_areas(self):
        """Georiënteerde kaartoppervlakte per driehoek"""
        p = self.vertices[self.triangles]
        e1 = p[:, 1] - p[:, 0]
        e2 = p[:, 2] - p[:, 0]
        return 0.5 * (e1[:, 0] * e2[:, 1] - e1[:, 1] * e2[:, 0])

    @cached_property
    def basis_gradients(self):
        """
        Constante kaartgradiënten van de drie lineaire basisfuncties per driehoek

        Returns:
            ndarray: (F, 2, 3), kolom i is ∇λ_i
        """
        p = self.vertices[self.triangles]
        dubbel = 2.0 * self.signed_areas
        grads = np.empty((len(self.triangles), 2, 3))
        for i in range(3):
            j, k = (i + 1) % 3, (i + 2) % 3
            # ∇λ_i staat loodrecht op de tegenoverliggende zijde
            grads[:, 0, i] = (p[:, j, 1] - p[:, k, 1]) / dubbel
            grads[:, 1, i] = (p[:, k, 0] - p[:, j, 0]) / dubbel
        return grads

    # ------------------------------------------------------------------
    # Topologie op het quotiënt
    # ------------------------------------------------------------------
    @cached_property
    def _edge_table(self):
        """
        Alle zijden op het quotiënt met hun voorkomens

        Returns:
            tuple: (sleutels (E,2) dof-paren, tellingen (E,), eerste voorkomen als
                    kaartpuntpaar (E,2))
        """
        lokaal = np.concatenate([
            self.triangles[:, [0, 1]],
            self.triangles[:, [1, 2]],
            self.triangles[:, [2, 0]],
        ])
        dofs = self.dof_of_vertex[lokaal]
        sleutels = np.sort(dofs, axis=1)
        uniek, eerste, tellingen = np.unique(sleutels, axis=0, return_index=True, return_counts=True)
        return uniek, tellingen, lokaal[eerste]

    @property
    def n_edges(self):
        return len(self._edge_table[0])

    @cached_property
    def boundary_edges(self):
        """
        Randzijden als (dof-paar, kaartpuntpaar)

        Returns:
            tuple: (dof_paren (B,2), kaart_paren (B,2))
        """
        uniek, tellingen, kaartparen = self._edge_table
        if np.any(tellingen > 2):
            slecht = uniek[tellingen > 2][0]
            raise MeshFout("Niet-variëteitszijde: meer dan twee driehoeken",
                           zijde=tuple(int(d) for d in slecht), aantal=int(tellingen[tellingen > 2][0]))
        rand = tellingen == 1
        return uniek[rand], kaartparen[rand]

    @cached_property
    def boundary_dofs(self):
        """Gesorteerde vrijheidsgraden op de rand"""
        return np.unique(self.boundary_edges[0])

    @cached_property
    def interior_dofs(self):
        return np.setdiff1d(np.arange(self.n_dof), self.boundary_dofs)

    @cached_property
    def boundary_edge_lengths(self):
        """Kaartlengte van elke randzijde"""
        _, kaartparen = self.boundary_edges
        verschil = self.vertices[kaartparen[:, 1]] - self.vertices[kaartparen[:, 0]]
        return np.linalg.norm(verschil, axis=1)

    @cached_property
    def boundary_vertex_weights(self):
        """
        Gelumpte kaartlengte per randvrijheidsgraad (halve lengte van elke aangrenzende zijde)

        Returns:
            ndarray: gewichten in de volgorde van boundary_dofs
        """
        dofparen, _ = self.boundary_edges
        gewichten = np.zeros(self.n_dof)
        halve = 0.5 * self.boundary_edge_lengths
        np.add.at(gewichten, dofparen[:, 0], halve)
        np.add.at(gewichten, dofparen[:, 1], halve)
        return gewichten[self.boundary_dofs]

    def euler_characteristic(self):
        """V − E + F op het quotiënt"""
        return int(self.n_dof - self.n_edges + len(self.triangles))

    def dof_coordinates(self):
        """Kaartcoördinaten van het canonieke punt per vrijheidsgraad"""
        return self.vertices[self.dof_vertices]

    def vertex_values(self, dof_values):
        """Breid waarden per vrijheidsgraad uit naar alle kaartpunten"""
        return np.asarray(dof_values)[self.dof_of_vertex]


def boundary_components(mesh):
    """
    Bepaal de randcycli van een net

    Args:
        mesh (TriangleMesh): Geldig net

    Returns:
        list: BoundaryLoop per randcomponent, gesorteerd op kleinste punt-id

    Raises:
        MeshFout: Bij een niet-variëteitszijde of een randpunt met graad ≠ 2
    """
    dofparen, _ = mesh.boundary_edges
    lengtes = mesh.boundary_edge_lengths
    buren = {}
    zijdelengte = {}
    for (a, b), lengte in zip(dofparen.tolist(), lengtes.tolist()):
        buren.setdefault(a, []).append(b)
        buren.setdefault(b, []).append(a)
        zijdelengte[(min(a, b), max(a, b))] = lengte

    for dof, lijst in buren.items():
        if len(lijst) != 2:
            raise MeshFout("Randpunt ligt niet op precies twee randzijden",
                           punt=int(mesh.dof_vertices[dof]), graad=len(lijst))

    bezocht = set()
    lussen = []
    for start in sorted(buren):
        if start in bezocht:
            continue
        lus = [start]
        bezocht.add(start)
        vorige, huidige = start, buren[start][0]
        lengte = zijdelengte[(min(start, huidige), max(start, huidige))]
        while huidige != start:
            lus.append(huidige)
            bezocht.add(huidige)
            a, b = buren[huidige]
            volgende = b if a == vorige else a
            lengte += zijdelengte[(min(huidige, volgende), max(huidige, volgende))]
            vorige, huidige = huidige, volgende
        lussen.append(BoundaryLoop(
            vertices=tuple(int(mesh.dof_vertices[d]) for d in lus),
            dofs=tuple(int(d) for d in lus),
            chart_length=float(lengte),
        ))
    return lussen


def expected_topology(mesh):
    """
    Verwachte Euler-karakteristiek en aantal randcomponenten volgens het type

    Returns:
        tuple: (chi, aantal_lussen)
    """
    if mesh.kind == DomainKind.DISK:
        return 1, 1
    if mesh.kind in (DomainKind.ANNULUS,):
        return 0, 2
    if mesh.kind == DomainKind.MOBIUS:
        return 0, 1
    k = 1 + len(mesh.holes)
    return 2 - k, k


def _controleer_naad(mesh, tolerantie=1e-9):
    """Controleer dat de naad een bijectie zonder dekpunten is die past bij de dekafbeelding"""
    if not mesh.seam:
        return
    dubbel = np.array([a for a, _ in mesh.seam])
    canoniek = np.array([b for _, b in mesh.seam])
    if len(np.unique(dubbel)) != len(dubbel) or len(np.unique(canoniek)) != len(canoniek):
        raise MeshFout("Naad is geen bijectie", paren=len(mesh.seam))
    if np.intersect1d(dubbel, canoniek).size:
        raise MeshFout("Naad bevat ketens of dekpunten")
    p = mesh.vertices[dubbel]
    q = mesh.vertices[canoniek]
    if mesh.kind == DomainKind.MOBIUS:
        # (t, π) ≈ (−t, 0): de dekafbeelding (t, θ) → (−t, θ + π)
        verwacht = np.column_stack([-q[:, 0], q[:, 1] + np.pi])
    else:
        verwacht = np.column_stack([q[:, 0], q[:, 1] + 2.0 * np.pi])
    afwijking = np.max(np.abs(p - verwacht))
    if afwijking > tolerantie:
        raise MeshFout("Naad past niet bij de dekafbeelding", afwijking=float(afwijking))


def validate_mesh(mesh, drempel=DEGENERATIE_DREMPEL):
    """
    Controleer alle netinvarianten

    Args:
        mesh (TriangleMesh): Te controleren net
        drempel (float): Minimale kaartoppervlakte per driehoek

    Returns:
        dict: Samenvatting (chi, lussen, punten, driehoeken)

    Raises:
        MeshFout: Bij de eerste geschonden invariant
    """
    oppervlakten = mesh.signed_areas
    if len(oppervlakten) == 0:
        raise MeshFout("Net zonder driehoeken")
    slechtste = int(np.argmin(oppervlakten))
    if oppervlakten[slechtste] <= drempel:
        raise MeshFout("Gedegenereerde of omgekeerde driehoek",
                       driehoek=slechtste, oppervlakte=float(oppervlakten[slechtste]))

    _controleer_naad(mesh)
    lussen = boundary_components(mesh)  # controleert ook de zijdetellingen

    chi = mesh.euler_characteristic()
    verwacht_chi, verwacht_lussen = expected_topology(mesh)
    if chi != verwacht_chi:
        raise MeshFout("Euler-karakteristiek past niet bij het type",
                       type=mesh.kind.value, chi=chi, verwacht=verwacht_chi)
    if len(lussen) != verwacht_lussen:
        raise MeshFout("Aantal randcomponenten past niet bij het type",
                       type=mesh.kind.value, lussen=len(lussen), verwacht=verwacht_lussen)

    samenvatting = {
        "chi": chi,
        "lussen": len(lussen),
        "punten": mesh.n_dof,
        "driehoeken": len(mesh.triangles),
    }
    logger.logInfo(f"Net gevalideerd ({mesh.kind.value}): {samenvatting}")
    return samenvatting
