"""
Sferisch certificaat voor extremale dichtheden

Voor een eigenwaardecluster met randwaarden Φ (n_b × m) wordt een positief
semidefiniete A gezocht met φᵀAφ = 1 op de rand. Dan is u = A^{1/2}φ een
afbeelding naar de eenheidsbol. Optioneel wordt ook Σ_ab A_ab τ(φ_a, φ_b) = 0 per
driehoek opgelegd; zonder die term is A op de annulus niet uniek.
"""
from dataclasses import dataclass

import numpy as np

from modules.fouten import InvoerFout
from modules.logger import logger
from modules.optimize.perturbation import _inverse_tensors
from modules.settings import instellingen


@dataclass(frozen=True, eq=False)
class ConformalityData:
    """
    Gegevens voor de conformiteitsterm

    Attributes:
        mesh (TriangleMesh): Net
        metric (DiscreteMetric): Metriek
        functions (ndarray): (n_dof, m) clustereigenfuncties op het hele net
        weight (float): Relatief gewicht van de term ten opzichte van de randterm
    """
    mesh: object
    metric: object
    functions: np.ndarray
    weight: float = 1e-2


@dataclass(frozen=True, eq=False)
class SphericalCertificate:
    """
    Attributes:
        coefficients (ndarray): Positief semidefiniete A (m × m)
        residual (float): √(∫(φᵀAφ − 1)² ds / L)
        maps (ndarray): (n_b, m) waarden van u = A^{1/2}φ op de randpunten
        pointwise_error (float): max |Σu_i² − 1| over de randpunten
        iterations (int): Aantal projectie-iteraties
    """
    coefficients: np.ndarray
    residual: float
    maps: np.ndarray
    pointwise_error: float
    iterations: int


def _symmetrische_sqrt(A):
    waarden, vectoren = np.linalg.eigh(A)
    return (vectoren * np.sqrt(np.maximum(waarden, 0.0))) @ vectoren.T


def _klip(A):
    waarden, vectoren = np.linalg.eigh(0.5 * (A + A.T))
    return (vectoren * np.maximum(waarden, 0.0)) @ vectoren.T


def _conformiteitsrijen(data, m):
    """Twee rijen per driehoek: de (0,0)- en (0,1)-component van Σ_ab A_ab τ(φ_a, φ_b)"""
    mesh, metric = data.mesh, data.metric
    functies = np.asarray(data.functions, dtype=float)
    if functies.shape != (mesh.n_dof, m):
        raise InvoerFout("Eigenfuncties passen niet bij het net of de cluster", vorm=functies.shape,
                         verwacht=(mesh.n_dof, m))
    grad = np.einsum("fai,fim->fma", mesh.basis_gradients, functies[mesh.triangle_dofs])
    g = metric.tensors
    inv, det = _inverse_tensors(g)
    buiten = 0.5 * (np.einsum("fma,fnb->fmnab", grad, grad) + np.einsum("fna,fmb->fmnab", grad, grad))
    inproduct = np.einsum("fma,fab,fnb->fmn", grad, inv, grad)
    tau = buiten - 0.5 * inproduct[..., None, None] * g[:, None, None]
    gewicht = np.sqrt(mesh.signed_areas * np.sqrt(det))
    rijen = np.concatenate([gewicht[:, None, None] * tau[..., 0, 0],
                            gewicht[:, None, None] * tau[..., 0, 1]])
    return rijen


def spherical_certificate(boundary_functions, boundary_mass, iterations=None, conformality=None):
    """
    Projecteerde kleinste kwadraten voor φᵀAφ = 1 met A ⪰ 0

    Args:
        boundary_functions (ndarray): (n_b, m) randwaarden van één eigenwaardecluster
        boundary_mass (ndarray): (n_b,) gelumpte randmassa
        iterations (int): Maximum aantal projectie-iteraties
        conformality (ConformalityData): Optionele conformiteitsterm

    Returns:
        SphericalCertificate: A, residu en de afbeeldingen u

    Raises:
        InvoerFout: Bij een lege cluster of verkeerde dimensies
    """
    Phi = np.atleast_2d(np.asarray(boundary_functions, dtype=float))
    if Phi.ndim != 2 or Phi.shape[1] == 0 or Phi.shape[0] == 0:
        logger.logFout("Sferisch certificaat zonder clusterfuncties gevraagd")
        raise InvoerFout("Cluster is leeg", vorm=Phi.shape)
    w = np.asarray(boundary_mass, dtype=float)
    if w.shape != (Phi.shape[0],):
        raise InvoerFout("Randmassa past niet bij de randwaarden", massa=w.shape, functies=Phi.shape)
    iterations = iterations or instellingen.haalGeheel("Optimalisatie", "certificaatiteraties")
    m = Phi.shape[1]

    rand = np.sqrt(w)[:, None, None] * np.einsum("ia,ib->iab", Phi, Phi)
    doel = np.sqrt(w)
    blokken, doelen = [rand.reshape(len(w), m * m)], [doel]
    if conformality is not None:
        conform = _conformiteitsrijen(conformality, m).reshape(-1, m * m)
        norm = float(np.linalg.norm(conform))
        if norm > 0:
            schaal = conformality.weight * float(np.linalg.norm(blokken[0])) / norm
            blokken.append(schaal * conform)
            doelen.append(np.zeros(len(conform)))
    F = np.vstack(blokken)
    y = np.concatenate(doelen)

    oplossing, *_ = np.linalg.lstsq(F, y, rcond=None)
    A = _klip(oplossing.reshape(m, m))
    lipschitz = 2.0 * float(np.linalg.norm(F, 2) ** 2)
    uitgevoerd = 0
    for uitgevoerd in range(1, iterations + 1):
        gradient = (2.0 * F.T @ (F @ A.ravel() - y)).reshape(m, m)
        nieuw = _klip(A - 0.5 * (gradient + gradient.T) / lipschitz)
        verschil = float(np.max(np.abs(nieuw - A)))
        A = nieuw
        if verschil <= 1e-14 * max(1.0, float(np.max(np.abs(A)))):
            break

    residu_punt = np.einsum("ia,ab,ib->i", Phi, A, Phi) - 1.0
    residu = float(np.sqrt(np.sum(w * residu_punt ** 2) / np.sum(w)))
    kaarten = Phi @ _symmetrische_sqrt(A)
    puntfout = float(np.max(np.abs(np.sum(kaarten ** 2, axis=1) - 1.0)))
    logger.logActie(f"Sferisch certificaat (cluster {m}): residu {residu:.3e}, "
                    f"puntsgewijs {puntfout:.3e}, {uitgevoerd} projecties")
    return SphericalCertificate(coefficients=A, residual=residu, maps=kaarten,
                                pointwise_error=puntfout, iterations=uitgevoerd)


def gram_residual(maps, coordinates):
    """
    max |UUᵀ − XXᵀ|: vergelijking van twee afbeeldingen op dezelfde punten
    op een orthogonale transformatie na
    """
    U = np.asarray(maps, dtype=float)
    X = np.asarray(coordinates, dtype=float)
    if U.shape[0] != X.shape[0]:
        raise InvoerFout("Afbeeldingen hebben verschillende aantallen punten", u=U.shape, x=X.shape)
    return float(np.max(np.abs(U @ U.T - X @ X.T)))
