"""
Controle van berekende resultaten tegen de bekende bovengrenzen

Steklov (oriënteerbaar, geslacht γ, k randcomponenten):
    σ₁L ≤ min{2π(γ+k), 8π⌊(γ+3)/2⌋}, met 2% marge voor discretisatie
Geslacht 0: σ₁L < 4π
Vlakke tori: λ₁A ≤ 16π
"""
import math
from dataclasses import dataclass, field

from modules.fouten import InvoerFout
from modules.logger import logger

STEKLOV_MARGE = 1.02
EXACTE_MARGE = 1.0001


def steklov_bound(gamma, k):
    """min{2π(γ+k), 8π⌊(γ+3)/2⌋}"""
    return min(2 * math.pi * (gamma + k), 8 * math.pi * ((gamma + 3) // 2))


@dataclass
class BoundReport:
    """
    Attributes:
        checks (list): dicts met run, check, value, bound, pass
    """
    checks: list = field(default_factory=list)

    @property
    def passed(self):
        return all(c["pass"] for c in self.checks)

    @property
    def failures(self):
        return [c for c in self.checks if not c["pass"]]


def _controle(naam, check, waarde, grens, voldaan, toelichting=""):
    return {"run": naam, "check": check, "value": float(waarde), "bound": float(grens),
            "pass": bool(voldaan), "evidence_only": False, "note": toelichting}


def bound_checks(results):
    """
    Toets een verzameling resultaten aan de grenzen

    Args:
        results (iterable): dicts met 'run' plus óf ('gamma', 'k', 'sigma1L'[, 'orientable'])
                            óf ('gamma', 'lambda1A')

    Returns:
        BoundReport: Eén check per toegepaste grens; overtredingen worden met de runnaam gelogd

    Raises:
        InvoerFout: Als een resultaat geen van beide vormen heeft
    """
    rapport = BoundReport()
    for resultaat in results:
        naam = resultaat.get("run", "onbekend")
        if "lambda1A" in resultaat:
            waarde = resultaat["lambda1A"]
            grens = 8 * math.pi * ((int(resultaat.get("gamma", 1)) + 3) // 2)
            rapport.checks.append(_controle(naam, "yang_yau", waarde, grens, waarde <= grens * EXACTE_MARGE))
        elif "sigma1L" in resultaat and "k" in resultaat:
            waarde = resultaat["sigma1L"]
            gamma, k = int(resultaat.get("gamma", 0)), int(resultaat["k"])
            if not resultaat.get("orientable", True):
                check = _controle(naam, "steklov_niet_orienteerbaar", waarde, math.inf, True,
                                  "geen grens voor niet-oriënteerbare oppervlakken")
                check["evidence_only"] = True
                rapport.checks.append(check)
                continue
            grens = steklov_bound(gamma, k)
            rapport.checks.append(_controle(naam, "steklov_grens", waarde, grens, waarde <= grens * STEKLOV_MARGE))
            if gamma == 0:
                rapport.checks.append(_controle(naam, "geslacht_nul", waarde, 4 * math.pi,
                                                waarde < 4 * math.pi * EXACTE_MARGE))
        else:
            raise InvoerFout("Resultaat mist sigma1L/k of lambda1A", resultaat=naam)

    for fout in rapport.failures:
        logger.logFout(f"Grens overschreden door run '{fout['run']}' ({fout['check']}): "
                       f"{fout['value']:.10f} > {fout['bound']:.10f}")
    logger.logActie(f"Grenscontrole: {len(rapport.checks)} checks, {len(rapport.failures)} overtredingen")
    return rapport
