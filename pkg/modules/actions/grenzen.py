"""
Grenzen actie voor Steklab
Voert de regressieruns uit als workflow en toetst alle genormaliseerde eigenwaarden aan de grenzen
"""
import pandas as pd

from modules.actions.base import ActieBasis, ActieResultaat
from modules.logger import logger
from modules.optimize import bound_checks, search_genus0
from modules.rapport_handler import rapportHandler

REGRESSIERUNS = (
    ("spectrum", {"label": "schijf", "domain": "disk"}),
    ("spectrum", {"label": "annulus", "domain": "annulus", "T": 1.0}),
    ("spectrum", {"label": "mobius", "domain": "mobius", "T": 1.0}),
    ("spectrum", {"label": "drie_gaten", "domain": "genus0_holes", "holes_k": 3}),
    ("optimize-modulus", {"label": "modulus_annulus", "family": "annulus"}),
    ("optimize-modulus", {"label": "modulus_mobius", "family": "mobius"}),
    ("torus-scan", {"label": "tori", "x_points": 6, "y_points": 6}),
)


class GrenzenActie(ActieBasis):
    """Actie om de regressieruns aan de bovengrenzen te toetsen"""

    standaardParameters = {
        "resolution": None,
        "genus0": False,
        "genus0_k": 3,
        "genus0_evaluations": 20,
        "genus0_resolution": 4,
    }

    def __init__(self):
        """Initialiseer de grenzen actie"""
        super().__init__(
            naam="bounds",
            beschrijving="Toets σ₁L en λ₁A van de regressieruns aan de bekende grenzen",
            categorie="Grenzen"
        )

    def bereken(self, parameters, seed):
        # workflow importeert het actieregister
        from modules.workflow import Workflow

        workflow = Workflow("grenzen")
        for actieNaam, runParameters in REGRESSIERUNS:
            runParameters = dict(runParameters)
            if actieNaam == "spectrum" and parameters["resolution"] is not None:
                runParameters["resolution"] = parameters["resolution"]
            workflow.voegActieToe(actieNaam, runParameters)

        gelukt = workflow.voerUit(
            lambda percentage, naam: logger.logInfo(f"Grenzen: {percentage:.0f}% ({naam})"), seed)
        checks, resultaten = [], []
        for (actieNaam, runParameters), resultaat in zip(workflow.acties, workflow.haalResultaten()):
            for check in resultaat.checks:
                checks.append({**check, "run": runParameters["label"]})
            resultaten.extend(resultaat.resultaten)
        if not gelukt:
            return ActieResultaat(False, "Regressieworkflow afgebroken", checks=checks)

        samenvatting = {}
        if parameters["genus0"]:
            zoektocht = search_genus0(int(parameters["genus0_k"]),
                                      resolution=int(parameters["genus0_resolution"]),
                                      outer_evaluations=int(parameters["genus0_evaluations"]))
            rapportHandler.voegTabelToe("geslacht0_zoektocht", pd.DataFrame(zoektocht.trajectory))
            checks.append({"check": "geslacht0_monotoon", "run": "geslacht0", "lhs": zoektocht.best_value,
                           "rhs": None, "residual": None, "pass": zoektocht.is_monotone(),
                           "evidence_only": False})
            if zoektocht.best_parameters is not None:
                resultaten.append({"run": "geslacht0", "gamma": 0, "k": zoektocht.k,
                                   "sigma1L": zoektocht.best_value, "orientable": True})
            samenvatting["genus0_lower_bound"] = zoektocht.best_value
            samenvatting["genus0_parameters"] = zoektocht.best_parameters

        grenzen = bound_checks(resultaten)
        checks.extend(grenzen.checks)
        rapportHandler.voegTabelToe("grenzen", pd.DataFrame(grenzen.checks))
        samenvatting.update({"runs": len(resultaten), "bound_checks": len(grenzen.checks),
                             "violations": len(grenzen.failures)})
        return ActieResultaat(
            True,
            f"{len(grenzen.checks)} grenscontroles, {len(grenzen.failures)} overtredingen",
            checks=checks,
            samenvatting=samenvatting,
            resultaten=resultaten,
        )
