"""
Acties voor Steklab: één actie per experiment-id
"""
from modules.logger import logger
from modules.actions.base import ActieBasis, ActieResultaat, maak_check
from modules.actions.spectrum import SpectrumActie
from modules.actions.verificatie import CatalogusVerificatieActie, ConformVerificatieActie
from modules.actions.optimalisatie import (
    DichtheidOptimalisatieActie,
    ModulusOptimalisatieActie,
    TorusScanActie,
)
from modules.actions.grenzen import GrenzenActie

BESCHIKBARE_ACTIES = {
    # Spectraal
    "spectrum": SpectrumActie(),

    # Verificatie
    "catalog-verify": CatalogusVerificatieActie(),
    "conformal-verify": ConformVerificatieActie(),

    # Optimalisatie
    "optimize-modulus": ModulusOptimalisatieActie(),
    "optimize-density": DichtheidOptimalisatieActie(),
    "torus-scan": TorusScanActie(),

    # Grenzen
    "bounds": GrenzenActie(),
}


def haalActieOp(actieNaam):
    """
    Haal een actie op basis van naam

    Args:
        actieNaam (str): Experiment-id

    Returns:
        ActieBasis: De actie of None als de actie niet bestaat
    """
    return BESCHIKBARE_ACTIES.get(actieNaam)


def voerActieUit(actieNaam, parameters, seed=None):
    """
    Voer een actie uit

    Args:
        actieNaam (str): Experiment-id
        parameters (dict): Parameters voor de actie
        seed (int): Seed voor gerandomiseerde acties

    Returns:
        ActieResultaat: Resultaat van de actie
    """
    actie = haalActieOp(actieNaam)

    if actie is None:
        logger.logFout(f"Actie '{actieNaam}' bestaat niet")
        return ActieResultaat(False, f"Actie '{actieNaam}' bestaat niet")

    logger.logInfo(f"Voer actie uit: {actieNaam} {parameters} (seed {seed})")
    return actie.voerUit(parameters, seed)


__all__ = [
    "ActieBasis",
    "ActieResultaat",
    "BESCHIKBARE_ACTIES",
    "haalActieOp",
    "maak_check",
    "voerActieUit",
]
