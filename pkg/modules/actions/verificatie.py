"""
Verificatie acties voor Steklab
Controleren de vrije-randvoorwaarden van catalogusoppervlakken en de conforme lengte-eigenschappen
"""
import numpy as np
import pandas as pd

from modules.actions.base import ActieBasis, ActieResultaat, maak_check
from modules.conformal import (
    VerificationRecord,
    first_variation_identities,
    flow_map,
    great_circle,
    index_form_normal_direction,
    length_deficit_profile,
    random_flow_suite,
    random_unit_vector,
    second_derivative_boundary_length,
    spherical_conformal_length,
)
from modules.fouten import InvoerFout
from modules.helpers import maak_rng
from modules.logger import logger
from modules.minsurf import (
    catalog_surface,
    catenoid_surface,
    geometry_checks,
    mobius_surface,
    sample_surface_frame,
    verify_free_boundary,
)
from modules.rapport_handler import rapportHandler

HARMONISCH_ANALYTISCH = 1e-8
HARMONISCH_FD = 1e-3
BOL_TOLERANTIE = 1e-10
RAND_TOLERANTIE = 1e-6


def kies_oppervlak(naam, T=None):
    """
    Catalogusoppervlak of een catenoïde/Möbiusband met willekeurige afkapping

    Raises:
        InvoerFout: Bij een onbekende naam of ontbrekende T
    """
    if naam in ("catenoid", "mobius"):
        if T is None:
            raise InvoerFout(f"Oppervlak '{naam}' vereist parameter T", surface=naam)
        return catenoid_surface(float(T)) if naam == "catenoid" else mobius_surface(float(T))
    return catalog_surface(naam)


class CatalogusVerificatieActie(ActieBasis):
    """Actie om een catalogusoppervlak als vrije-rand minimaal oppervlak te controleren"""

    standaardParameters = {
        "surface": "critical_catenoid",
        "T": None,
        "grid": 64,
        "method": None,
        "sample_grid": 32,
    }

    def __init__(self):
        """Initialiseer de catalogus verificatie actie"""
        super().__init__(
            naam="catalog-verify",
            beschrijving="Controleer Δx = 0, ∇_η x = x, |x| = 1 en de globale identiteiten",
            categorie="Verificatie"
        )

    def bereken(self, parameters, seed):
        oppervlak = kies_oppervlak(parameters["surface"], parameters["T"])
        rapport = verify_free_boundary(oppervlak, int(parameters["grid"]), parameters["method"])

        drempel = HARMONISCH_ANALYTISCH if rapport.method == "analytic" else HARMONISCH_FD
        checks = [
            maak_check("harmoniciteit", rapport.harmonicity_residual, drempel,
                       rapport.harmonicity_residual <= drempel, residual=rapport.harmonicity_residual),
            maak_check("op_de_bol", rapport.sphere_residual, BOL_TOLERANTIE,
                       rapport.sphere_residual <= BOL_TOLERANTIE, residual=rapport.sphere_residual),
            maak_check("conormaal_gelijk_aan_positie", rapport.boundary_condition_residual, RAND_TOLERANTIE,
                       rapport.boundary_condition_residual <= RAND_TOLERANTIE,
                       residual=rapport.boundary_condition_residual),
        ]
        for controle in geometry_checks(oppervlak, rapport.area, rapport.boundary_length):
            checks.append(maak_check(controle["check"], controle["lhs"], controle["rhs"], controle["pass"],
                                     residual=controle["residual"]))

        rapportHandler.voegTabelToe(self.tabelnaam(parameters, "oppervlak"),
                                    sample_surface_frame(oppervlak, int(parameters["sample_grid"])))
        rapportHandler.voegTabelToe(self.tabelnaam(parameters, "residuen"), pd.DataFrame([{
            "surface": rapport.surface, "grid": rapport.grid, "method": rapport.method,
            "harmonicity": rapport.harmonicity_residual,
            "boundary_condition": rapport.boundary_condition_residual,
            "sphere": rapport.sphere_residual, "area": rapport.area,
            "boundary_length": rapport.boundary_length,
        }]))
        return ActieResultaat(
            True,
            f"Vrije-randcontrole van {oppervlak.name} uitgevoerd",
            checks=checks,
            samenvatting={"area": rapport.area, "boundary_length": rapport.boundary_length},
        )


class ConformVerificatieActie(ActieBasis):
    """Actie om de conforme lengte-eigenschappen van een vrije-rand oppervlak te controleren"""

    standaardParameters = {
        "surface": "critical_catenoid",
        "samples": None,
        "directions": 3,
        "tolerance": 1e-3,
        "index_tolerance": 1e-4,
    }
    gerandomiseerd = True

    def __init__(self):
        """Initialiseer de conforme verificatie actie"""
        super().__init__(
            naam="conformal-verify",
            beschrijving="Randlengte onder conforme flows, tweede variatie en indexvorm",
            categorie="Verificatie"
        )

    def bereken(self, parameters, seed):
        oppervlak = kies_oppervlak(parameters["surface"])
        if not oppervlak.free_boundary:
            raise InvoerFout("Conforme verificatie vereist een vrije-rand oppervlak", surface=oppervlak.name)
        seed = 7 if seed is None else int(seed)
        records = list(random_flow_suite(oppervlak, parameters["samples"], seed=seed))

        rng = maak_rng(seed)
        richtingen = [np.eye(oppervlak.n)[-1]] + [random_unit_vector(rng, oppervlak.n)
                                                 for _ in range(int(parameters["directions"]) - 1)]
        tolerantie = float(parameters["tolerance"])
        profielen = []
        for v in richtingen:
            fd, formule = second_derivative_boundary_length(oppervlak, v)
            fout = abs(fd - formule) / max(1.0, abs(formule))
            records.append(VerificationRecord("tweede_variatie_randlengte", oppervlak.name,
                                              {"v": v.tolist()}, fd, formule, fout, fout <= tolerantie))
            for rij in length_deficit_profile(oppervlak, v):
                profielen.append({**{f"v{i + 1}": float(c) for i, c in enumerate(v)}, **rij})

            if oppervlak.n == 3 and oppervlak.second_fundamental_norm2 is None:
                logger.logWaarschuwing(f"Indexvorm overgeslagen voor {oppervlak.name}: geen analytische A")
                records.append(VerificationRecord("indexvorm", oppervlak.name, {"v": v.tolist()},
                                                  passed=True, evidence_only=True))
            elif oppervlak.n == 3:
                q, formule_q = index_form_normal_direction(oppervlak, v)
                fout_q = abs(q - formule_q) / max(1.0, abs(formule_q))
                records.append(VerificationRecord("indexvorm", oppervlak.name, {"v": v.tolist()}, q, formule_q,
                                                  fout_q, fout_q <= float(parameters["index_tolerance"])))

            cirkel = great_circle(v) if oppervlak.n == 3 else None
            if cirkel is not None:
                t = 0.5
                lengte = spherical_conformal_length(cirkel, flow_map(v, t))
                verwacht = 2 * np.pi / np.cosh(t)
                records.append(VerificationRecord("grootcirkel_lengte", cirkel.name, {"v": v.tolist(), "t": t},
                                                  lengte, verwacht, abs(lengte - verwacht),
                                                  abs(lengte - verwacht) <= 1e-8))

        y = 2.0 * np.eye(oppervlak.n)[0]
        eerste = first_variation_identities(oppervlak, y)
        records.append(VerificationRecord("eerste_variatie", oppervlak.name, {"y": y.tolist()},
                                          eerste["interior_integral"], eerste["boundary_integral"],
                                          eerste["first_variation_gap"], eerste["first_variation_gap"] <= 1e-5))
        records.append(VerificationRecord("randidentiteit_veldterm", oppervlak.name, {"y": y.tolist()},
                                          eerste["identity_residual"], 0.0, eerste["identity_residual"],
                                          eerste["identity_residual"] <= 1e-10))
        records.append(VerificationRecord("divergentie_niet_negatief", oppervlak.name, {"y": y.tolist()},
                                          eerste["min_divergence"], 0.0, max(0.0, -eerste["min_divergence"]),
                                          eerste["min_divergence"] >= -1e-12))

        checks = [r.alsDict() for r in records]
        rapportHandler.voegTabelToe(self.tabelnaam(parameters, "controles"), pd.DataFrame([
            {"theorem_id": c["theorem_id"], "lhs": c["lhs"], "rhs": c["rhs"], "residual": c["residual"],
             "pass": c["pass"]} for c in checks]))
        rapportHandler.voegTabelToe(self.tabelnaam(parameters, "lengtetekort"), pd.DataFrame(profielen))

        geslaagd = sum(1 for r in records if r.theorem_id == "randlengte_neemt_af" and r.passed)
        totaal = sum(1 for r in records if r.theorem_id == "randlengte_neemt_af")
        logger.logActie(f"Conforme verificatie {oppervlak.name}: {geslaagd}/{totaal} lengtecontroles geslaagd")
        return ActieResultaat(
            True,
            f"{geslaagd}/{totaal} randlengtecontroles geslaagd op {oppervlak.name}",
            checks=checks,
            samenvatting={"length_checks_passed": geslaagd, "length_checks_total": totaal},
        )
