"""
Basis klassen voor acties in Steklab
"""
from modules.fouten import InvoerFout, SteklabFout
from modules.logger import logger


class ActieResultaat:
    """Resultaat van een actie"""
    def __init__(self, succes, bericht, checks=None, samenvatting=None, resultaten=None):
        """
        Args:
            succes (bool): Of de actie zonder fouten is afgerond
            bericht (str): Korte omschrijving of foutmelding
            checks (list): Check-dicts met minstens 'pass'
            samenvatting (dict): Kerngetallen voor report.json
            resultaten (list): Resultaten in de vorm die bound_checks verwacht
        """
        self.succes = succes
        self.bericht = bericht
        self.checks = checks or []
        self.samenvatting = samenvatting or {}
        self.resultaten = resultaten or []

    @property
    def geslaagd(self):
        return self.succes and all(c.get("pass", False) for c in self.checks)


def maak_check(naam, waarde, grens, voldaan, **extra):
    """Check-dict in het rapportformaat"""
    check = {"check": naam, "lhs": float(waarde), "rhs": float(grens), "residual": extra.pop("residual", None),
             "pass": bool(voldaan), "evidence_only": False}
    check.update(extra)
    return check


class ActieBasis:
    """Basis klasse voor alle acties"""

    # Parameters met standaardwaarden; None betekent "uit config.ini"
    standaardParameters = {}
    gerandomiseerd = False

    def __init__(self, naam, beschrijving, categorie="Algemeen"):
        """
        Initialiseer een actie

        Args:
            naam (str): Experiment-id van de actie
            beschrijving (str): Beschrijving van de actie
            categorie (str): Categorie van de actie
        """
        self.naam = naam
        self.beschrijving = beschrijving
        self.categorie = categorie

    def controleerParameters(self, parameters):
        """
        Raises:
            InvoerFout: Bij een onbekende parameter
        """
        toegestaan = set(self.standaardParameters) | {"label"}
        onbekend = sorted(set(parameters) - toegestaan)
        if onbekend:
            raise InvoerFout(f"Onbekende parameter(s) voor '{self.naam}'", onbekend=onbekend,
                             toegestaan=sorted(toegestaan))

    def tabelnaam(self, parameters, naam):
        label = parameters.get("label")
        return f"{label}_{naam}" if label else naam

    def voerUit(self, parameters, seed=None):
        """
        Voer de actie uit; fouten uit de bibliotheek worden een mislukt resultaat

        Args:
            parameters (dict): Parameters voor de actie
            seed (int): Seed voor gerandomiseerde onderdelen

        Returns:
            ActieResultaat: Resultaat van de actie
        """
        try:
            self.controleerParameters(parameters)
            volledig = dict(self.standaardParameters)
            volledig.update(parameters)
            return self.bereken(volledig, seed)
        except SteklabFout as e:
            logger.logFout(f"Fout bij uitvoeren {type(self).__name__}: {e}")
            return ActieResultaat(False, f"Fout bij uitvoeren actie: {e}",
                                  checks=[{"check": type(e).__name__, "pass": False, "error": e.alsDict()}])

    def bereken(self, parameters, seed):
        """
        Voer de berekening uit (implementeer in subklassen)

        Returns:
            ActieResultaat: Resultaat van de actie
        """
        raise NotImplementedError("Deze methode moet worden geïmplementeerd in subklassen")
