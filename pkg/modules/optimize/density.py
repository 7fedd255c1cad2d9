"""
Maximalisatie van σ₁L over de randdichtheid binnen een conforme klasse

Een stap is een geprojecteerde stijging op de dichtheid met vaste totale lengte.
Is σ₁ (bijna) meervoudig, dan wordt de stijgrichting het element met minimale
norm in de convexe omhullende van de supergradiënten
    G(P) = −σ·w∘diag(Φ P Φᵀ),   P ⪰ 0, spoor P = 1,
met Φ de randwaarden van de clustereigenfuncties.
"""
import json
import os
from dataclasses import dataclass, field

import numpy as np
import pandas as pd
from scipy.linalg import eigh

from modules.fouten import InvoerFout, OptimalisatieFout
from modules.helpers import als_json
from modules.logger import logger
from modules.settings import instellingen, zorg_voor_directory
from modules.spectral import DiscreteMetric, assemble_operators

MIN_STAP = 1e-9
MAX_STAP = 0.5


@dataclass(frozen=True, eq=False)
class BoundaryDensity:
    """
    Positief gewicht per randvrijheidsgraad

    Attributes:
        values (ndarray): ρ_i > 0 in de volgorde van mesh.boundary_dofs
        weights (ndarray): gelumpte kaartlengte w_i
    """
    values: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        waarden = np.array(self.values, dtype=float)
        gewichten = np.array(self.weights, dtype=float)
        if waarden.shape != gewichten.shape:
            raise InvoerFout("Dichtheid en gewichten verschillen van lengte",
                             dichtheid=waarden.shape, gewichten=gewichten.shape)
        if not np.all(waarden > 0):
            slecht = int(np.argmin(waarden))
            raise InvoerFout("Randdichtheid moet overal positief zijn", randpunt=slecht,
                             waarde=float(waarden[slecht]))
        waarden.setflags(write=False)
        gewichten.setflags(write=False)
        object.__setattr__(self, "values", waarden)
        object.__setattr__(self, "weights", gewichten)

    @classmethod
    def uniform(cls, mesh, total_length=None):
        gewichten = mesh.boundary_vertex_weights
        waarden = np.ones(len(gewichten))
        if total_length is not None:
            waarden *= total_length / gewichten.sum()
        return cls(waarden, gewichten)

    @classmethod
    def from_values(cls, mesh, values):
        return cls(values, mesh.boundary_vertex_weights)

    @property
    def total_length(self):
        return float(self.weights @ self.values)

    def normalized(self, total_length):
        return BoundaryDensity(self.values * (total_length / self.total_length), self.weights)

    def tangent(self, richting):
        """Projecteer een richting op Σ w_i d_i = 0"""
        w = self.weights
        return richting - w * (float(w @ richting) / float(w @ w))


@dataclass
class OptimizationReport:
    """
    Verloop en uitkomst van een optimalisatie

    Attributes:
        trajectory (list): (iteratie, σ₁L) van de geaccepteerde iteraties, startpunt inbegrepen
        final_density (ndarray): Einddichtheid (None bij modulusoptimalisatie)
        final_value (float): σ₁L aan het eind
        multiplicity (int): Clustergrootte van σ₁ in het eindpunt
        certificate_residual (float): Residu van het sferische certificaat, indien berekend
        modulus (float): Eindmodulus (modulusoptimalisatie)
    """
    trajectory: list = field(default_factory=list)
    final_density: np.ndarray = None
    final_value: float = None
    multiplicity: int = 1
    certificate_residual: float = None
    modulus: float = None
    iterations: int = 0
    accepted: int = 0
    rejected: int = 0
    converged: bool = False
    stop_reason: str = ""

    @property
    def initial_value(self):
        return self.trajectory[0][1] if self.trajectory else None

    def is_monotone(self, tolerantie=1e-10):
        waarden = [w for _, w in self.trajectory]
        return all(b >= a - tolerantie for a, b in zip(waarden, waarden[1:]))

    def trajectory_frame(self):
        return pd.DataFrame(self.trajectory, columns=["iteration", "sigma1L"])


@dataclass(frozen=True, eq=False)
class _Toestand:
    density: np.ndarray
    sigma: float
    value: float
    cluster: np.ndarray
    functions: np.ndarray


def _analyseer(mesh, tensors, dichtheid, lengte, clustertolerantie):
    metric = DiscreteMetric(tensors, dichtheid)
    ops = assemble_operators(mesh, metric)
    n_b = len(mesh.boundary_dofs)
    aantal = min(n_b, 10)
    massa = ops.boundary_weights
    waarden, vectoren = eigh(ops.dtn, np.diag(massa), subset_by_index=[0, aantal - 1])
    sigma = float(waarden[1])
    cluster = np.flatnonzero((np.arange(aantal) >= 1) & (waarden <= sigma * (1 + clustertolerantie)))
    return _Toestand(density=np.asarray(dichtheid, dtype=float), sigma=sigma, value=sigma * lengte,
                     cluster=cluster, functions=vectoren[:, cluster])


def _projecteer_simplex(v):
    """Euclidische projectie op {x ≥ 0, Σx = 1}"""
    u = np.sort(v)[::-1]
    cumulatief = np.cumsum(u) - 1.0
    index = np.arange(1, len(v) + 1)
    rho = np.flatnonzero(u - cumulatief / index > 0)[-1]
    theta = cumulatief[rho] / (rho + 1.0)
    return np.maximum(v - theta, 0.0)


def _projecteer_spectraplex(P):
    waarden, vectoren = np.linalg.eigh(0.5 * (P + P.T))
    return (vectoren * _projecteer_simplex(waarden)) @ vectoren.T


def cluster_ascent_direction(density, sigma, functions, lengte, iteraties=200):
    """
    Stijgrichting van λ_min over de cluster: minimum-norm element van de
    geprojecteerde supergradiëntverzameling

    Args:
        density (BoundaryDensity): Huidige dichtheid (voor gewichten en projectie)
        sigma (float): Clusterwaarde
        functions (ndarray): (n_b, m) M-orthonormale clustervectoren
        lengte (float): Vaste totale lengte (schaal van σL)

    Returns:
        tuple: (richting, P)
    """
    m = functions.shape[1]
    w = density.weights
    # kolommen: geprojecteerde supergradiënt per matrixelement (a, b)
    basis = np.empty((len(w), m, m))
    for a in range(m):
        for b in range(m):
            basis[:, a, b] = density.tangent(-sigma * lengte * w * functions[:, a] * functions[:, b])
    plat = basis.reshape(len(w), m * m)
    lipschitz = 2.0 * float(np.linalg.norm(plat, 2) ** 2)
    P = np.eye(m) / m
    if m > 1 and lipschitz > 0:
        for _ in range(iteraties):
            richting = plat @ P.ravel()
            gradient = 2.0 * (plat.T @ richting).reshape(m, m)
            nieuw = _projecteer_spectraplex(P - gradient / lipschitz)
            if np.max(np.abs(nieuw - P)) <= 1e-14:
                P = nieuw
                break
            P = nieuw
    return plat @ P.ravel(), P


def _schrijf_checkpoint(map_, iteratie, toestand, cluster_grootte):
    zorg_voor_directory(map_)
    pad = os.path.join(map_, f"checkpoint_{iteratie:05d}.json")
    gegevens = {"iteration": iteratie, "density": toestand.density, "sigma1L": toestand.value,
                "cluster_size": cluster_grootte}
    with open(pad, "w", encoding="utf-8") as f:
        json.dump(als_json(gegevens), f, indent=2)
    return pad


def maximize_density(mesh, initial=None, iterations=None, metric=None, checkpoint_dir=None,
                     clustertolerantie=None, checkpointinterval=None):
    """
    Geprojecteerde stijging van σ₁L over de randdichtheid

    Args:
        mesh (TriangleMesh): Geldig net met rand
        initial (BoundaryDensity): Startdichtheid; standaard uniform
        iterations (int): Maximum aantal iteraties
        metric (DiscreteMetric): Inwendige tensoren (standaard vlak); de dichtheid ervan wordt genegeerd
        checkpoint_dir (str): Map voor JSON-checkpoints (None: niet schrijven)

    Returns:
        OptimizationReport: Verloop (monotoon) en einddichtheid

    Raises:
        InvoerFout: Bij een dichtheid die niet bij het net past
        OptimalisatieFout: Als het startpunt geen niet-nul eigenwaarde heeft
    """
    iterations = iterations if iterations is not None else instellingen.haalGeheel("Optimalisatie", "iteraties")
    clustertolerantie = clustertolerantie if clustertolerantie is not None else \
        instellingen.haalGetal("Optimalisatie", "clustertolerantie")
    checkpointinterval = checkpointinterval or instellingen.haalGeheel("Optimalisatie", "checkpointinterval")

    dichtheid = initial if initial is not None else BoundaryDensity.uniform(mesh)
    if not isinstance(dichtheid, BoundaryDensity):
        dichtheid = BoundaryDensity.from_values(mesh, dichtheid)
    if dichtheid.values.shape != (len(mesh.boundary_dofs),):
        raise InvoerFout("Dichtheid past niet bij het net", dichtheid=dichtheid.values.shape,
                         randpunten=len(mesh.boundary_dofs))
    tensors = (metric or DiscreteMetric.euclidean(mesh)).tensors
    lengte = dichtheid.total_length

    toestand = _analyseer(mesh, tensors, dichtheid.values, lengte, clustertolerantie)
    if not toestand.sigma > 0:
        raise OptimalisatieFout("Geen positieve eerste eigenwaarde in het startpunt", sigma=toestand.sigma)
    rapport = OptimizationReport(trajectory=[(0, toestand.value)])
    logger.logInfo(f"Dichtheidsoptimalisatie gestart op {mesh.kind.value}: σ₁L = {toestand.value:.10f}, "
                   f"{iterations} iteraties")

    stap = 0.1
    for iteratie in range(1, iterations + 1):
        rapport.iterations = iteratie
        huidige = BoundaryDensity(toestand.density, dichtheid.weights)
        richting, _ = cluster_ascent_direction(huidige, toestand.sigma, toestand.functions, lengte)
        schaal = float(np.max(np.abs(richting)))
        if schaal <= 1e-10 * toestand.value * float(np.mean(huidige.weights)) / lengte:
            rapport.converged, rapport.stop_reason = True, "stationair"
            break

        kandidaat = toestand.density + stap * float(np.mean(toestand.density)) * richting / schaal
        if np.any(kandidaat <= 0):
            logger.logWaarschuwing(f"Iteratie {iteratie}: niet-positieve dichtheid, stap gehalveerd")
            rapport.rejected += 1
            stap *= 0.5
        else:
            kandidaat *= lengte / float(huidige.weights @ kandidaat)
            nieuw = _analyseer(mesh, tensors, kandidaat, lengte, clustertolerantie)
            if nieuw.value > toestand.value:
                toestand = nieuw
                rapport.accepted += 1
                rapport.trajectory.append((iteratie, toestand.value))
                stap = min(MAX_STAP, 1.5 * stap)
            else:
                rapport.rejected += 1
                stap *= 0.5

        if checkpoint_dir and iteratie % checkpointinterval == 0:
            _schrijf_checkpoint(checkpoint_dir, iteratie, toestand, len(toestand.cluster))
        if stap < MIN_STAP:
            rapport.converged, rapport.stop_reason = True, "stapgrootte"
            break
    else:
        rapport.stop_reason = "iteraties"

    rapport.final_density = toestand.density
    rapport.final_value = toestand.value
    rapport.multiplicity = len(toestand.cluster)
    logger.logActie(f"Dichtheidsoptimalisatie klaar ({rapport.stop_reason}): σ₁L = {toestand.value:.10f}, "
                    f"cluster {rapport.multiplicity}, {rapport.accepted} stappen geaccepteerd")
    return rapport
