"""
Spectrum actie voor Steklab
Berekent het Steklov-spectrum op een referentiedomein en vergelijkt met de exacte spectra
"""
import math

import numpy as np
import pandas as pd

from modules.actions.base import ActieBasis, ActieResultaat, maak_check
from modules.fouten import InvoerFout
from modules.logger import logger
from modules.mesh import DomainKind, DomainSpec, boundary_components, generate_domain, ring_holes
from modules.rapport_handler import rapportHandler
from modules.settings import instellingen
from modules.spectral import (
    DiscreteMetric,
    annulus_exact_spectrum,
    eigenfunction_frame,
    mobius_exact_spectrum,
    spectrum_frame,
    steklov_spectrum,
)


def bouw_domein(parameters):
    """
    DomainSpec uit actieparameters

    Raises:
        InvoerFout: Bij een onbekend domein
    """
    try:
        soort = DomainKind(parameters["domain"])
    except ValueError:
        raise InvoerFout("Onbekend domein", domain=parameters["domain"],
                         geldig=[d.value for d in DomainKind]) from None
    resolutie = parameters.get("resolution") or instellingen.haalGeheel("Mesh", "resolutie")
    if soort in (DomainKind.ANNULUS, DomainKind.MOBIUS):
        return DomainSpec(soort, modulus=float(parameters["T"]), resolution=resolutie)
    if soort == DomainKind.GENUS0_HOLES:
        gaten = ring_holes(int(parameters["holes_k"]), float(parameters["ring_radius"]),
                           float(parameters["hole_radius"]))
        return DomainSpec(soort, holes=gaten, resolution=resolutie)
    return DomainSpec(soort, resolution=resolutie)


class SpectrumActie(ActieBasis):
    """Actie om een FEM Steklov-spectrum te berekenen"""

    standaardParameters = {
        "domain": "disk",
        "T": 1.0,
        "resolution": None,
        "count": None,
        "holes_k": 3,
        "ring_radius": 0.5,
        "hole_radius": 0.15,
        "eigenfunctions": False,
        "tolerance": 0.01,
    }

    def __init__(self):
        """Initialiseer de spectrum actie"""
        super().__init__(
            naam="spectrum",
            beschrijving="Bereken het Steklov-spectrum op een referentiedomein",
            categorie="Spectraal"
        )

    def bereken(self, parameters, seed):
        """
        Args:
            parameters (dict): domain, T, resolution, count, holes_k, ring_radius,
                hole_radius, eigenfunctions, tolerance

        Returns:
            ActieResultaat: Met σ₁L in de samenvatting en een oracle-vergelijking voor annulus/Möbius
        """
        mesh = generate_domain(bouw_domein(parameters))
        aantal = parameters["count"] or instellingen.haalGeheel("Spectraal", "aantal")
        aantal = min(int(aantal), len(mesh.boundary_dofs))
        spectrum = steklov_spectrum(mesh, DiscreteMetric.euclidean(mesh), aantal)
        L = spectrum.boundary_length
        sigma1L = float(spectrum.values[1] * L)

        frame = spectrum_frame(spectrum)
        frame["normalized"] = spectrum.values * L
        rapportHandler.voegTabelToe(self.tabelnaam(parameters, "spectrum"), frame)
        if parameters["eigenfunctions"]:
            rapportHandler.voegTabelToe(self.tabelnaam(parameters, "eigenfuncties"),
                                        eigenfunction_frame(spectrum, mesh))

        tolerantie = float(parameters["tolerance"])
        checks = []
        if mesh.kind == DomainKind.DISK:
            fout = abs(sigma1L - 2 * math.pi) / (2 * math.pi)
            checks.append(maak_check("schijf_sigma1L", sigma1L, 2 * math.pi, fout <= tolerantie, residual=fout))
        elif mesh.kind in (DomainKind.ANNULUS, DomainKind.MOBIUS):
            oracle = (annulus_exact_spectrum if mesh.kind == DomainKind.ANNULUS else mobius_exact_spectrum)(
                mesh.modulus, n_max=aantal)
            exact = oracle.values[:aantal]
            vergelijking = pd.DataFrame({
                "index": np.arange(aantal),
                "fem": spectrum.values,
                "exact": exact,
                "mode": list(oracle.labels[:aantal]),
            })
            vergelijking["relative_error"] = np.abs(vergelijking["fem"] - exact) / np.maximum(np.abs(exact), 1.0)
            rapportHandler.voegTabelToe(self.tabelnaam(parameters, "oracle"), vergelijking)
            grootste = float(vergelijking["relative_error"].max())
            checks.append(maak_check("fem_oracle_overeenkomst", grootste, tolerantie, grootste <= tolerantie,
                                     residual=grootste))

        aantal_lussen = len(boundary_components(mesh))
        resultaat = {"run": parameters.get("label") or f"spectrum_{mesh.kind.value}", "gamma": 0,
                     "k": aantal_lussen, "sigma1L": sigma1L, "orientable": mesh.orientable}
        logger.logActie(f"Spectrum {mesh.kind.value}: σ₁L = {sigma1L:.10f}")
        return ActieResultaat(
            True,
            f"Spectrum berekend op {mesh.kind.value} ({mesh.n_dof} punten)",
            checks=checks,
            samenvatting={"sigma1L": sigma1L, "boundary_length": L, "eigenvalues": spectrum.values,
                          "groups": spectrum.groups},
            resultaten=[resultaat],
        )
