"""
Referentiedomeinen voor Steklab
Genereert driehoeksnetten van de schijf, de platte annulus, de platte Möbiusband
en de eenheidsschijf met k−1 gaten.
"""
import math
from dataclasses import dataclass

import numpy as np
from scipy.spatial import Delaunay

from modules.fouten import InvoerFout
from modules.logger import logger
from modules.mesh.trimesh import DomainKind, TriangleMesh, validate_mesh


@dataclass(frozen=True)
class DomainSpec:
    """
    Beschrijving van een te genereren domein

    Attributes:
        kind (DomainKind): disk, annulus, mobius of genus0_holes
        modulus (float): halve breedte T van de platte kaart (annulus/Möbius)
        holes (tuple): ((cx, cy), r) per gat (genus0_holes)
        resolution (int): positieve resolutie, het aantal punten groeit kwadratisch hiermee
    """
    kind: DomainKind
    modulus: float = None
    holes: tuple = ()
    resolution: int = 6

    def valideer(self):
        """
        Controleer de invarianten van de domeinbeschrijving

        Raises:
            InvoerFout: Bij een ongeldige modulus, resolutie of gatenconfiguratie
        """
        try:
            kind = DomainKind(self.kind)
        except ValueError:
            raise InvoerFout("Onbekend domeintype", kind=self.kind) from None
        if int(self.resolution) < 1:
            raise InvoerFout("Resolutie moet positief zijn", resolution=self.resolution)
        if kind in (DomainKind.ANNULUS, DomainKind.MOBIUS):
            if self.modulus is None or not self.modulus > 0:
                raise InvoerFout("Modulus T moet positief zijn", kind=kind.value, modulus=self.modulus)
        if kind == DomainKind.GENUS0_HOLES:
            gaten = [(np.asarray(c, dtype=float), float(r)) for c, r in self.holes]
            for i, (c, r) in enumerate(gaten):
                if r <= 0:
                    raise InvoerFout("Gatstraal moet positief zijn", gat=i, straal=r)
                if np.linalg.norm(c) + r >= 1.0:
                    raise InvoerFout("Gat ligt niet binnen de eenheidsschijf", gat=i,
                                     middelpunt=c.tolist(), straal=r)
            for i in range(len(gaten)):
                for j in range(i + 1, len(gaten)):
                    afstand = np.linalg.norm(gaten[i][0] - gaten[j][0])
                    if afstand <= gaten[i][1] + gaten[j][1]:
                        raise InvoerFout("Gaten overlappen", gaten=(i, j),
                                         afstand=float(afstand),
                                         som_stralen=gaten[i][1] + gaten[j][1])
        return kind


def ring_holes(k, ring_radius, hole_radius):
    """
    Standaardgeometrie: k−1 congruente gaten gelijkmatig op een concentrische ring

    Args:
        k (int): Aantal randcomponenten (buitenrand meegeteld)
        ring_radius (float): Straal van de ring met gatmiddelpunten
        hole_radius (float): Straal van elk gat

    Returns:
        tuple: ((cx, cy), r) per gat
    """
    if k < 1:
        raise InvoerFout("Aantal randcomponenten moet minstens 1 zijn", k=k)
    aantal = k - 1
    if aantal == 1:
        return (((0.0, 0.0), float(hole_radius)),)
    return tuple(
        ((ring_radius * math.cos(2 * math.pi * i / aantal), ring_radius * math.sin(2 * math.pi * i / aantal)),
         float(hole_radius))
        for i in range(aantal)
    )


def _orienteer(vertices, triangles):
    """Draai negatief georiënteerde driehoeken om"""
    p = vertices[triangles]
    e1 = p[:, 1] - p[:, 0]
    e2 = p[:, 2] - p[:, 0]
    negatief = (e1[:, 0] * e2[:, 1] - e1[:, 1] * e2[:, 0]) < 0
    triangles = triangles.copy()
    triangles[negatief] = triangles[negatief][:, [0, 2, 1]]
    return triangles


def _disk_mesh(resolution):
    """
    Concentrische ringen: ring j heeft 6j punten, buren verbonden met een ritssluiting

    Returns:
        tuple: (vertices, triangles)
    """
    punten = [(0.0, 0.0)]
    ringen = [[0]]
    for j in range(1, resolution + 1):
        straal = j / resolution
        aantal = 6 * j
        start = len(punten)
        for i in range(aantal):
            hoek = 2 * math.pi * i / aantal
            punten.append((straal * math.cos(hoek), straal * math.sin(hoek)))
        ringen.append(list(range(start, start + aantal)))

    driehoeken = []
    for j in range(1, resolution + 1):
        binnen, buiten = ringen[j - 1], ringen[j]
        n_buiten = len(buiten)
        if len(binnen) == 1:
            for k in range(n_buiten):
                driehoeken.append((binnen[0], buiten[k], buiten[(k + 1) % n_buiten]))
            continue
        n_binnen = len(binnen)
        i = k = 0
        while i < n_binnen or k < n_buiten:
            volgende_binnen = 2 * math.pi * (i + 1) / n_binnen
            volgende_buiten = 2 * math.pi * (k + 1) / n_buiten
            if k < n_buiten and (i == n_binnen or volgende_buiten <= volgende_binnen + 1e-14):
                driehoeken.append((binnen[i % n_binnen], buiten[k], buiten[(k + 1) % n_buiten]))
                k += 1
            else:
                driehoeken.append((binnen[i], buiten[k % n_buiten], binnen[(i + 1) % n_binnen]))
                i += 1

    vertices = np.array(punten)
    return vertices, _orienteer(vertices, np.array(driehoeken, dtype=np.int64))


def _chart_mesh(T, resolution, mobius):
    """
    Rechthoekig kaartnet op [−T,T]×[0,Θ] met uniforme diagonaal

    Voor de annulus is Θ = 2π en wordt kolom θ=2π op θ=0 gelijmd; voor de
    Möbiusband is Θ = π en wordt (t, π) op (−t, 0) gelijmd. Het t-rooster is
    symmetrisch zodat de Möbiuslijming puntsgewijs klopt.

    Returns:
        tuple: (vertices, triangles, seam)
    """
    n_theta = 8 * resolution
    stap = 2 * math.pi / n_theta
    n_t = max(2, int(math.ceil(2 * T / stap)))
    kolommen = n_theta // 2 if mobius else n_theta
    breedte = kolommen + 1

    t = np.linspace(-T, T, n_t + 1)
    theta = stap * np.arange(breedte)
    tt, th = np.meshgrid(t, theta, indexing="ij")
    vertices = np.column_stack([tt.ravel(), th.ravel()])

    def index(j, k):
        return j * breedte + k

    driehoeken = []
    for j in range(n_t):
        for k in range(kolommen):
            p00, p10 = index(j, k), index(j + 1, k)
            p01, p11 = index(j, k + 1), index(j + 1, k + 1)
            driehoeken.append((p00, p10, p11))
            driehoeken.append((p00, p11, p01))

    if mobius:
        seam = [(index(j, kolommen), index(n_t - j, 0)) for j in range(n_t + 1)]
    else:
        seam = [(index(j, kolommen), index(j, 0)) for j in range(n_t + 1)]
    return vertices, np.array(driehoeken, dtype=np.int64), seam


def _holes_mesh(holes, resolution):
    """
    Eenheidsschijf met cirkelvormige gaten via Delaunay-triangulatie

    Randpunten liggen exact op de cirkels; inwendige punten van een hexagonaal
    rooster houden minstens 0.6h afstand tot elke rand zodat randzijden in de
    triangulatie terechtkomen.
    """
    n_buiten = 8 * resolution
    h = 2 * math.pi / n_buiten

    hoeken = 2 * math.pi * np.arange(n_buiten) / n_buiten
    rand = [np.column_stack([np.cos(hoeken), np.sin(hoeken)])]
    for (c, r) in holes:
        aantal = max(8, int(math.ceil(2 * math.pi * r / h)))
        a = 2 * math.pi * np.arange(aantal) / aantal
        rand.append(np.column_stack([c[0] + r * np.cos(a), c[1] + r * np.sin(a)]))

    rijafstand = h * math.sqrt(3) / 2
    rijen = np.arange(-1.0, 1.0 + rijafstand, rijafstand)
    rooster = []
    for i, y in enumerate(rijen):
        verschuiving = 0.5 * h if i % 2 else 0.0
        for x in np.arange(-1.0 + verschuiving, 1.0 + h, h):
            rooster.append((x, y))
    rooster = np.array(rooster)
    houd = np.linalg.norm(rooster, axis=1) < 1.0 - 0.6 * h
    for (c, r) in holes:
        houd &= np.linalg.norm(rooster - np.asarray(c), axis=1) > r + 0.6 * h
    middelpunten = np.array([c for c, _ in holes], dtype=float).reshape(-1, 2)

    punten = np.vstack(rand + [rooster[houd], middelpunten])
    driehoeken = Delaunay(punten).simplices

    zwaartepunten = punten[driehoeken].mean(axis=1)
    binnen_gat = np.zeros(len(driehoeken), dtype=bool)
    for (c, r) in holes:
        binnen_gat |= np.linalg.norm(zwaartepunten - np.asarray(c), axis=1) < r
    driehoeken = driehoeken[~binnen_gat]

    gebruikt = np.unique(driehoeken)
    nieuw = -np.ones(len(punten), dtype=np.int64)
    nieuw[gebruikt] = np.arange(len(gebruikt))
    vertices = punten[gebruikt]
    return vertices, _orienteer(vertices, nieuw[driehoeken])


def generate_domain(spec, valideer=True):
    """
    Genereer het driehoeksnet van een referentiedomein

    Args:
        spec (DomainSpec): Domeinbeschrijving
        valideer (bool): Controleer de netinvarianten na het genereren

    Returns:
        TriangleMesh: Het net

    Raises:
        InvoerFout: Bij een ongeldige beschrijving
        MeshFout: Als het gegenereerde net een invariant schendt
    """
    try:
        kind = spec.valideer()
    except InvoerFout as e:
        logger.logFout(f"Domein afgewezen: {e}")
        raise

    resolutie = int(spec.resolution)
    if kind == DomainKind.DISK:
        vertices, triangles = _disk_mesh(resolutie)
        mesh = TriangleMesh(vertices, triangles, kind=kind, resolution=resolutie)
    elif kind in (DomainKind.ANNULUS, DomainKind.MOBIUS):
        mobius = kind == DomainKind.MOBIUS
        vertices, triangles, seam = _chart_mesh(float(spec.modulus), resolutie, mobius)
        mesh = TriangleMesh(vertices, triangles, seam=seam, kind=kind, modulus=float(spec.modulus),
                            orientable=not mobius, resolution=resolutie)
    else:
        holes = tuple(((float(c[0]), float(c[1])), float(r)) for c, r in spec.holes)
        vertices, triangles = _holes_mesh(holes, resolutie)
        mesh = TriangleMesh(vertices, triangles, kind=kind, holes=holes, resolution=resolutie)

    logger.logActie(f"Domein {kind.value} gegenereerd: {mesh.n_dof} punten, "
                    f"{len(mesh.triangles)} driehoeken (resolutie {resolutie})")
    if valideer:
        validate_mesh(mesh)
    return mesh
