"""
Zoektocht naar grote σ₁L op vlakke domeinen met k randcomponenten

Buiten: Nelder–Mead over (ringstraal, gatstraal) van ring_holes(k, ...).
Binnen: dichtheidsstijging op het bijbehorende net. Elke evaluatie is een
gecertificeerde ondergrens; het rapport houdt de beste waarde tot nu toe bij.
"""
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize

from modules.fouten import InvoerFout, SteklabFout
from modules.logger import logger
from modules.mesh import DomainKind, DomainSpec, generate_domain, ring_holes
from modules.optimize.density import maximize_density

RANDMARGE = 0.05
MIN_GATSTRAAL = 0.05


@dataclass
class Genus0Report:
    """
    Attributes:
        k (int): Aantal randcomponenten
        best_value (float): Beste σ₁L (ondergrens)
        best_parameters (tuple): (ringstraal, gatstraal) van de beste evaluatie
        trajectory (list): dicts evaluation, ring_radius, hole_radius, sigma1L, best
    """
    k: int
    best_value: float = -np.inf
    best_parameters: tuple = None
    trajectory: list = field(default_factory=list)

    @property
    def evaluations(self):
        return len(self.trajectory)

    def is_monotone(self):
        beste = [r["best"] for r in self.trajectory]
        return all(b >= a for a, b in zip(beste, beste[1:]))


def feasible(k, ring_radius, hole_radius):
    """Gaten liggen binnen de schijf en raken elkaar niet"""
    if hole_radius < MIN_GATSTRAAL:
        return False
    if k == 2:
        return hole_radius < 1.0 - RANDMARGE
    if ring_radius + hole_radius > 1.0 - RANDMARGE:
        return False
    afstand = 2 * ring_radius * np.sin(np.pi / (k - 1))
    return afstand > 2 * hole_radius + RANDMARGE


def search_genus0(k=3, start=(0.5, 0.15), resolution=4, outer_evaluations=20, inner_iterations=30):
    """
    Best-effort zoektocht naar σ*(0, k)

    Args:
        k (int): Aantal randcomponenten (≥ 2)
        start (tuple): Start (ringstraal, gatstraal)
        resolution (int): Netresolutie
        outer_evaluations (int): Maximum aantal Nelder–Mead evaluaties
        inner_iterations (int): Iteraties van de dichtheidsstijging per evaluatie

    Returns:
        Genus0Report: Beste ondergrens en het verloop

    Raises:
        InvoerFout: Bij k < 2 of een ontoelaatbaar startpunt
    """
    if k < 2:
        raise InvoerFout("Zoektocht vereist minstens twee randcomponenten", k=k)
    if not feasible(k, *start):
        raise InvoerFout("Startgeometrie is ontoelaatbaar", k=k, start=tuple(start))
    rapport = Genus0Report(k=k)
    logger.logInfo(f"Geslacht-0 zoektocht gestart: k={k}, start {tuple(start)}, resolutie {resolution}")

    def doel(parameters):
        ring, gat = float(parameters[0]), float(parameters[1])
        if not feasible(k, ring, gat):
            return 0.0
        try:
            mesh = generate_domain(DomainSpec(DomainKind.GENUS0_HOLES, holes=ring_holes(k, ring, gat),
                                              resolution=resolution))
            waarde = maximize_density(mesh, iterations=inner_iterations).final_value
        except SteklabFout as e:
            logger.logWaarschuwing(f"Evaluatie ({ring:.4f}, {gat:.4f}) mislukt: {e}")
            return 0.0
        if waarde > rapport.best_value:
            rapport.best_value, rapport.best_parameters = waarde, (ring, gat)
        rapport.trajectory.append({"evaluation": len(rapport.trajectory) + 1, "ring_radius": ring,
                                   "hole_radius": gat, "sigma1L": waarde, "best": rapport.best_value})
        logger.logActie(f"Geslacht 0, k={k}: ({ring:.4f}, {gat:.4f}) → σ₁L = {waarde:.8f}, "
                        f"beste {rapport.best_value:.8f}")
        return -waarde

    minimize(doel, np.asarray(start, dtype=float), method="Nelder-Mead",
             options={"maxfev": outer_evaluations, "xatol": 1e-3, "fatol": 1e-6,
                      "initial_simplex": _start_simplex(start)})
    logger.logActie(f"Geslacht-0 zoektocht klaar: σ₁L ≥ {rapport.best_value:.8f} na {rapport.evaluations} evaluaties")
    return rapport


def _start_simplex(start):
    ring, gat = start
    return np.array([[ring, gat], [ring + 0.1, gat], [ring, gat + 0.05]])
