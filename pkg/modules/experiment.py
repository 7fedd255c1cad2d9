"""
Experiment module voor Steklab
Vertaalt een experimentconfiguratie naar een actie, een rapport en een exitcode
"""
from dataclasses import asdict, dataclass, field

from modules import __version__
from modules.actions import BESCHIKBARE_ACTIES, haalActieOp, voerActieUit
from modules.fouten import InvoerFout
from modules.logger import logger
from modules.rapport_handler import rapportHandler
from modules.settings import instellingen

EXIT_GESLAAGD = 0
EXIT_CHECK_GEFAALD = 1
EXIT_GEBRUIKSFOUT = 2


@dataclass
class ExperimentConfig:
    """
    Attributes:
        experiment (str): Experiment-id, een sleutel van BESCHIKBARE_ACTIES
        parameters (dict): Actieparameters
        seed (int): Seed; voor gerandomiseerde experimenten standaard [Algemeen] seed
        output (str): Uitvoermap voor report.json en data/
    """
    experiment: str
    parameters: dict = field(default_factory=dict)
    seed: int = None
    output: str = None

    def alsDict(self):
        return asdict(self)


def run(config):
    """
    Voer één experiment uit en schrijf het rapport

    Args:
        config (ExperimentConfig): De configuratie

    Returns:
        int: 0 als alle checks slagen, 1 bij een gefaalde check of fout, 2 bij een gebruiksfout
    """
    actie = haalActieOp(config.experiment)
    if actie is None:
        logger.logFout(f"Onbekend experiment '{config.experiment}'; kies uit {sorted(BESCHIKBARE_ACTIES)}")
        return EXIT_GEBRUIKSFOUT
    try:
        actie.controleerParameters(config.parameters)
    except InvoerFout as e:
        logger.logFout(f"Ongeldige parameters voor '{config.experiment}': {e.alsDict()}")
        return EXIT_GEBRUIKSFOUT

    if config.seed is None and actie.gerandomiseerd:
        config.seed = instellingen.haalGeheel("Algemeen", "seed")
    if config.output is None:
        config.output = instellingen.haalOp("Algemeen", "uitvoermap")
    if not rapportHandler.begin(config.output):
        return EXIT_GEBRUIKSFOUT

    logger.logInfo(f"Experiment '{config.experiment}' gestart (versie {__version__}, seed {config.seed})")
    resultaat = voerActieUit(config.experiment, config.parameters, config.seed)
    rapportHandler.voegChecksToe(resultaat.checks)
    rapportHandler.slaRapportOp(config.alsDict(), resultaat, resultaat.samenvatting)

    gefaald = rapportHandler.gefaaldeChecks()
    if not resultaat.succes or gefaald:
        for check in gefaald:
            naam = check.get("check") or check.get("theorem_id")
            logger.logFout(f"Check '{naam}' gefaald in run '{check.get('run', config.experiment)}'")
        logger.logFout(f"Experiment '{config.experiment}' niet geslaagd: {resultaat.bericht}")
        return EXIT_CHECK_GEFAALD
    logger.logInfo(f"Experiment '{config.experiment}' geslaagd: {resultaat.bericht}")
    return EXIT_GESLAAGD
