"""
Rapport Handler module voor Steklab
Verantwoordelijk voor het wegschrijven van report.json, de CSV-plotdata en het optionele werkboek
"""
import datetime
import json
import os

import pandas as pd

from modules import __version__
from modules.helpers import als_json
from modules.logger import logger
from modules.settings import instellingen, zorg_voor_directory
from modules.spectral.export import float_format


class RapportHandler:
    """
    RapportHandler klasse voor het verzamelen en opslaan van experimentresultaten
    """

    def __init__(self):
        """Initialiseer de RapportHandler"""
        self.uitvoermap = None
        self.tabellen = {}
        self.checks = []

    def begin(self, uitvoermap):
        """
        Begin een nieuw rapport in een uitvoermap

        Args:
            uitvoermap (str): Map voor report.json en data/

        Returns:
            bool: True als de map beschrijfbaar is, anders False
        """
        self.tabellen = {}
        self.checks = []
        if not zorg_voor_directory(os.path.join(uitvoermap, "data")):
            return False
        if not os.access(uitvoermap, os.W_OK):
            logger.logFout(f"Uitvoermap is niet beschrijfbaar: {uitvoermap}")
            return False
        self.uitvoermap = uitvoermap
        logger.logInfo(f"Rapport gestart in {uitvoermap}")
        return True

    def voegTabelToe(self, naam, frame):
        """
        Registreer een tabel en schrijf hem direct als data/<naam>.csv

        Args:
            naam (str): Tabelnaam zonder extensie
            frame (DataFrame): De gegevens

        Returns:
            str: Pad van het CSV-bestand, of None zonder actieve uitvoermap
        """
        if self.uitvoermap is None:
            logger.logFout(f"Kan tabel '{naam}' niet schrijven: geen rapport gestart")
            return None
        self.tabellen[naam] = frame
        pad = os.path.join(self.uitvoermap, "data", f"{naam}.csv")
        frame.to_csv(pad, index=False, float_format=float_format())
        logger.logActie(f"Tabel '{naam}' geschreven ({len(frame)} rijen)")
        return pad

    def voegChecksToe(self, checks):
        """Voeg check-dicts (check/theorem_id, residual, pass, ...) toe aan het rapport"""
        self.checks.extend(checks)

    def haalTabelOp(self, naam):
        return self.tabellen.get(naam)

    def alleChecksGeslaagd(self):
        return all(bool(c.get("pass", False)) for c in self.checks)

    def gefaaldeChecks(self):
        return [c for c in self.checks if not c.get("pass", False)]

    def slaRapportOp(self, config, resultaat, extra=None):
        """
        Schrijf report.json

        Args:
            config (dict): De experimentconfiguratie
            resultaat (ActieResultaat): Uitkomst van de actie
            extra (dict): Aanvullende samenvattende waarden

        Returns:
            str: Pad van report.json, of None bij een fout
        """
        if self.uitvoermap is None:
            logger.logFout("Kan rapport niet opslaan: geen rapport gestart")
            return None
        rapport = {
            "artifact": "steklab",
            "version": __version__,
            "created": datetime.datetime.now().isoformat(timespec="seconds"),
            "config": config,
            "success": bool(resultaat.succes and self.alleChecksGeslaagd()),
            "message": resultaat.bericht,
            "checks": self.checks,
            "tables": sorted(self.tabellen),
            "summary": extra or {},
        }
        pad = os.path.join(self.uitvoermap, "report.json")
        try:
            with open(pad, "w", encoding="utf-8") as f:
                json.dump(als_json(rapport), f, indent=2, ensure_ascii=False, allow_nan=True)
        except OSError as e:
            logger.logFout(f"Fout bij opslaan rapport: {e}")
            return None
        logger.logInfo(f"Rapport opgeslagen: {pad}")

        if instellingen.haalBool("Uitvoer", "excelwerkboek") and self.tabellen:
            self.slaWerkboekOp()
        return pad

    def slaWerkboekOp(self):
        """
        Sla alle tabellen op in data/resultaten.xlsx, één blad per tabel

        Returns:
            bool: True als het opslaan succesvol was, anders False
        """
        pad = os.path.join(self.uitvoermap, "data", "resultaten.xlsx")
        try:
            with pd.ExcelWriter(pad, engine="openpyxl") as schrijver:
                for naam, frame in self.tabellen.items():
                    frame.to_excel(schrijver, sheet_name=naam[:31], index=False)
            logger.logInfo(f"Werkboek opgeslagen: {pad}")
            return True
        except (OSError, ValueError) as e:
            logger.logFout(f"Fout bij opslaan werkboek: {e}")
            return False


# Singleton instance voor gebruik in de hele applicatie
rapportHandler = RapportHandler()
