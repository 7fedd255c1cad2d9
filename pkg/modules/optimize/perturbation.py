"""
Eerste-ordevariatie van Steklov-eigenwaarden

Langs het metriekpad g + t·h met randdichtheid ρ·√(1 + t·h(T,T)) is de afgeleide
van een enkelvoudige σ gelijk aan
    Q_h(u) = −Σ_T ⟨τ(u), h⟩_g da_T − (σ/2)·Σ_i M_ii u_i² h(T,T)_i
met τ(u) = du⊗du − ½|du|²_g g. Een conforme randvariatie ρ·√(1 + t·φ) geeft
    Q_φ(u) = −(σ/2)·Σ_i M_ii u_i² φ_i.
h(T,T) wordt in de basismetriek geëvalueerd; voor paden die de randrichting
veranderen is Q_h dus padafhankelijk.
"""
from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh

from modules.fouten import InvoerFout
from modules.logger import logger
from modules.spectral import DiscreteMetric, assemble_operators

NORMALISATIE_TOLERANTIE = 1e-8


def _inverse_tensors(g):
    det = g[:, 0, 0] * g[:, 1, 1] - g[:, 0, 1] * g[:, 1, 0]
    inv = np.empty_like(g)
    inv[:, 0, 0] = g[:, 1, 1] / det
    inv[:, 1, 1] = g[:, 0, 0] / det
    inv[:, 0, 1] = -g[:, 0, 1] / det
    inv[:, 1, 0] = -g[:, 1, 0] / det
    return inv, det


@dataclass(frozen=True, eq=False)
class StressEnergy:
    """
    Stress-energietensor per driehoek

    Attributes:
        tensors (ndarray): (F, 2, 2) τ(u) in kaartcoördinaten
        trace (ndarray): g^{ij}τ_ij per driehoek (diagnostiek, nul in dimensie 2)
        area_elements (ndarray): da_T = kaartoppervlakte·√det g
    """
    tensors: np.ndarray
    trace: np.ndarray
    area_elements: np.ndarray

    @property
    def max_trace(self):
        return float(np.max(np.abs(self.trace))) if len(self.trace) else 0.0


def _gradienten(mesh, u):
    u = np.asarray(u, dtype=float)
    if u.shape != (mesh.n_dof,):
        raise InvoerFout("Eigenfunctie past niet bij het net", vorm=u.shape, vrijheidsgraden=mesh.n_dof)
    return np.einsum("fai,fi->fa", mesh.basis_gradients, u[mesh.triangle_dofs])


def stress_energy(mesh, metric, u):
    """
    τ(u) = du⊗du − ½|du|²_g·g voor een stuksgewijs lineaire functie

    Args:
        mesh (TriangleMesh): Net
        metric (DiscreteMetric): Metriek per driehoek
        u (ndarray): Waarden per vrijheidsgraad

    Returns:
        StressEnergy: Tensoren, spoor en oppervlakte-elementen
    """
    du = _gradienten(mesh, u)
    g = metric.tensors
    inv, det = _inverse_tensors(g)
    norm2 = np.einsum("fa,fab,fb->f", du, inv, du)
    tau = np.einsum("fa,fb->fab", du, du) - 0.5 * norm2[:, None, None] * g
    spoor = np.einsum("fab,fab->f", inv, tau)
    return StressEnergy(tensors=tau, trace=spoor, area_elements=mesh.signed_areas * np.sqrt(det))


def _randrichtingen(mesh):
    """Per randzijde: (positie in boundary_dofs van beide punten, kaartvector, driehoek)"""
    dofparen, kaartparen = mesh.boundary_edges
    zijde_naar_driehoek = {}
    for f, (a, b, c) in enumerate(mesh.triangle_dofs.tolist()):
        for p, q in ((a, b), (b, c), (c, a)):
            zijde_naar_driehoek[(min(p, q), max(p, q))] = f
    driehoek = np.array([zijde_naar_driehoek[(min(p, q), max(p, q))] for p, q in dofparen.tolist()],
                        dtype=np.int64)
    posities = np.searchsorted(mesh.boundary_dofs, dofparen)
    vector = mesh.vertices[kaartparen[:, 1]] - mesh.vertices[kaartparen[:, 0]]
    return posities, vector, driehoek


@dataclass(frozen=True, eq=False)
class MetricPerturbation:
    """
    Symmetrisch tensorveld h per driehoek plus h(T,T) per randvrijheidsgraad

    Attributes:
        tensors (ndarray): (F, 2, 2) symmetrische tensoren
        boundary_tt (ndarray): h(T,T) met T de eenheidsraaklijn voor de basismetriek
    """
    tensors: np.ndarray
    boundary_tt: np.ndarray

    @classmethod
    def from_tensors(cls, mesh, metric, tensors):
        """
        Bereken h(T,T) uit de tensoren van de driehoeken langs de rand

        Per randzijde e is h(T,T) = eᵀhe / eᵀge; een randpunt krijgt het
        lengtegewogen gemiddelde van zijn twee zijden.
        """
        h = np.asarray(tensors, dtype=float)
        if h.shape != (len(mesh.triangles), 2, 2):
            raise InvoerFout("Perturbatie past niet bij het net", vorm=h.shape, driehoeken=len(mesh.triangles))
        h = 0.5 * (h + np.transpose(h, (0, 2, 1)))
        posities, e, driehoek = _randrichtingen(mesh)
        g = metric.tensors[driehoek]
        waarde = np.einsum("za,zab,zb->z", e, h[driehoek], e) / np.einsum("za,zab,zb->z", e, g, e)
        lengte = np.linalg.norm(e, axis=1)
        som = np.zeros(len(mesh.boundary_dofs))
        gewicht = np.zeros(len(mesh.boundary_dofs))
        for kolom in (0, 1):
            np.add.at(som, posities[:, kolom], 0.5 * lengte * waarde)
            np.add.at(gewicht, posities[:, kolom], 0.5 * lengte)
        return cls(h, som / gewicht)

    @classmethod
    def conformal(cls, mesh, metric):
        """h = g: de zuivere schaalvariatie"""
        return cls(np.array(metric.tensors), np.ones(len(mesh.boundary_dofs)))

    @classmethod
    def zero(cls, mesh):
        return cls(np.zeros((len(mesh.triangles), 2, 2)), np.zeros(len(mesh.boundary_dofs)))

    @classmethod
    def random(cls, mesh, metric, rng, amplitude=0.2):
        """Willekeurig symmetrisch veld met entries ~ amplitude·N(0,1)"""
        a = amplitude * rng.standard_normal((len(mesh.triangles), 2, 2))
        return cls.from_tensors(mesh, metric, a)


def perturbed_metric(metric, perturbation, t):
    """
    Punt g + t·h op het metriekpad, randdichtheid ρ·√(1 + t·h(T,T))

    Raises:
        InvoerFout: Als 1 + t·h(T,T) ≤ 0 ergens op de rand
    """
    factor = 1.0 + t * perturbation.boundary_tt
    if np.any(factor <= 0):
        raise InvoerFout("Randdichtheid wordt niet-positief langs het pad", t=t,
                         minimum=float(np.min(factor)))
    return DiscreteMetric(metric.tensors + t * perturbation.tensors,
                          metric.boundary_density * np.sqrt(factor))


def conformally_perturbed_metric(metric, phi, t):
    """
    Conforme randvariatie ρ·√(1 + t·φ); in dimensie 2 verandert de inwendige
    conforme factor de stijfheid niet

    Raises:
        InvoerFout: Als 1 + t·φ ≤ 0 ergens op de rand
    """
    factor = 1.0 + t * np.asarray(phi, dtype=float)
    if np.any(factor <= 0):
        raise InvoerFout("Randdichtheid wordt niet-positief langs het pad", t=t,
                         minimum=float(np.min(factor)))
    return metric.with_density(metric.boundary_density * np.sqrt(factor))


def _randmassa(mesh, metric):
    return mesh.boundary_vertex_weights * metric.boundary_density


def _controleer_normalisatie(mesh, metric, u):
    u_rand = np.asarray(u, dtype=float)[mesh.boundary_dofs]
    norm = float(np.sum(_randmassa(mesh, metric) * u_rand ** 2))
    if abs(norm - 1.0) > NORMALISATIE_TOLERANTIE:
        logger.logFout(f"Eigenfunctie niet genormaliseerd: ‖u‖² = {norm:.12g}")
        raise InvoerFout("Eigenfunctie moet genormaliseerd zijn op de rand", norm2=norm)
    return u_rand


def q_form_metric(mesh, metric, u, sigma, perturbation):
    """
    Afgeleide Q_h(u) van σ langs het metriekpad van perturbed_metric

    Args:
        mesh (TriangleMesh): Net
        metric (DiscreteMetric): Basismetriek
        u (ndarray): Eigenfunctie per vrijheidsgraad, ‖u‖_{L²(∂M)} = 1
        sigma (float): Bijbehorende eigenwaarde
        perturbation (MetricPerturbation): h en h(T,T)

    Returns:
        float: Q_h(u)

    Raises:
        InvoerFout: Als de normalisatie meer dan 1e-8 afwijkt
    """
    u_rand = _controleer_normalisatie(mesh, metric, u)
    tau = stress_energy(mesh, metric, u)
    inv, _ = _inverse_tensors(metric.tensors)
    inproduct = np.einsum("fab,fbc,fcd,fda->f", inv, tau.tensors, inv, perturbation.tensors)
    inwendig = -float(np.sum(inproduct * tau.area_elements))
    rand = -0.5 * sigma * float(np.sum(_randmassa(mesh, metric) * u_rand ** 2 * perturbation.boundary_tt))
    return inwendig + rand


def q_form_conformal(mesh, metric, u, sigma, phi):
    """
    Q_φ(u) = −(σ/2)∫_{∂M} u²φ ds

    Raises:
        InvoerFout: Als de normalisatie meer dan 1e-8 afwijkt
    """
    u_rand = _controleer_normalisatie(mesh, metric, u)
    phi = np.asarray(phi, dtype=float)
    if phi.shape != u_rand.shape:
        raise InvoerFout("Randfunctie past niet bij de rand", vorm=phi.shape, randpunten=len(u_rand))
    return -0.5 * sigma * float(np.sum(_randmassa(mesh, metric) * u_rand ** 2 * phi))


def mean_free(mesh, metric, phi):
    """Trek het ds-gemiddelde af zodat ∫φ ds = 0"""
    phi = np.asarray(phi, dtype=float)
    massa = _randmassa(mesh, metric)
    return phi - float(massa @ phi) / float(massa.sum())


def pencil_eigenvalues(mesh, metric, count):
    """Alleen de kleinste count eigenwaarden van de DtN-bundel"""
    ops = assemble_operators(mesh, metric)
    return eigh(ops.dtn, np.diag(ops.boundary_weights), subset_by_index=[0, count - 1], eigvals_only=True)


def finite_difference_sigma(mesh, path, index=1, step=1e-4):
    """
    Centrale differentie (σ(δ) − σ(−δ)) / 2δ langs een metriekpad

    Args:
        mesh (TriangleMesh): Net
        path (callable): t ↦ DiscreteMetric
        index (int): Eigenwaarde-index (0 is de constante)
        step (float): δ
    """
    plus = pencil_eigenvalues(mesh, path(step), index + 1)[index]
    min_ = pencil_eigenvalues(mesh, path(-step), index + 1)[index]
    return float((plus - min_) / (2 * step))
