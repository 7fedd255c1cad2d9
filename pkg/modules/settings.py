"""
Settings module voor Steklab
Beheert de instellingen uit config.ini: resoluties, toleranties, uitvoermap
"""
import os
import configparser
from modules.logger import logger

# Map waarin main.py en config.ini staan
APPLICATIE_PAD = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def maak_absoluut_pad(pad):
    """
    Converteer een relatief pad naar een absoluut pad

    Args:
        pad (str): Het relatieve pad dat geconverteerd moet worden

    Returns:
        str: Het absolute pad, of het originele pad als het al absoluut is
    """
    if os.path.isabs(pad):
        return pad
    return os.path.abspath(pad)


def zorg_voor_directory(directory_pad):
    """
    Zorgt ervoor dat de opgegeven directory bestaat, maakt deze aan indien nodig

    Args:
        directory_pad (str): Pad naar de directory die moet bestaan

    Returns:
        bool: True als de directory bestaat of succesvol is aangemaakt, anders False
    """
    try:
        abs_dir = maak_absoluut_pad(directory_pad)
        if not os.path.exists(abs_dir):
            os.makedirs(abs_dir)
            logger.logInfo(f"Directory aangemaakt: {abs_dir}")
        return True
    except OSError as e:
        logger.logFout(f"Fout bij aanmaken directory {directory_pad}: {e}")
        return False


class Instellingen:
    """Instellingen klasse voor het beheren van rekeninstellingen"""

    def __init__(self, configBestand=None):
        """
        Initialiseer de instellingen

        Args:
            configBestand (str): Pad naar het configuratiebestand
        """
        self.configBestand = configBestand or os.path.join(APPLICATIE_PAD, "config.ini")
        self.config = configparser.ConfigParser()

        # Standaardinstellingen
        self.standaardInstellingen = {
            'Algemeen': {
                'Uitvoermap': 'uitvoer',
                'Seed': '7',
            },
            'Mesh': {
                'Resolutie': '6',
                'Degeneratiedrempel': '1e-12',
            },
            'Spectraal': {
                'Aantal': '10',
                'Oracle_groepering': '1e-6',
                'Fem_groeperingsfactor': '10',
            },
            'Kwadratuur': {
                'Startorde': '16',
                'Maxorde': '1024',
                'Tolerantie': '1e-8',
                'Divergentiedrempel': '1e-4',
            },
            'Conform': {
                'Steekproeven': '200',
                'Stappen': '1e-2, 5e-3, 2.5e-3',
                'Stabiliteitsdrempel': '1e-4',
            },
            'Optimalisatie': {
                'Iteraties': '500',
                'Checkpointinterval': '25',
                'Clustertolerantie': '1e-3',
                'Lijnzoektolerantie': '1e-10',
                'Certificaatiteraties': '50',
            },
            'Uitvoer': {
                'Significante_cijfers': '12',
                'Excelwerkboek': 'False',
            },
            'Logging': {
                'Maxlogbestanden': '5',
            },
        }

        if os.path.exists(self.configBestand):
            try:
                self.config.read(self.configBestand, encoding='utf-8')
                logger.logInfo(f"Instellingen geladen uit {self.configBestand}")
            except configparser.Error as e:
                logger.logFout(f"Fout bij laden instellingen: {e}")
                self._maakStandaardInstellingen()
        else:
            self._maakStandaardInstellingen()

    def _maakStandaardInstellingen(self):
        """Maak standaardinstellingen aan"""
        for sectie, opties in self.standaardInstellingen.items():
            if not self.config.has_section(sectie):
                self.config.add_section(sectie)
            for optie, waarde in opties.items():
                self.config.set(sectie, optie, waarde)

        self.slaOp()
        logger.logInfo("Standaardinstellingen aangemaakt")

    def _standaard(self, sectie, optie):
        """Zoek de ingebouwde standaardwaarde (hoofdletterongevoelig)"""
        for s, opties in self.standaardInstellingen.items():
            if s.lower() == sectie.lower():
                for o, w in opties.items():
                    if o.lower() == optie.lower():
                        return w
        return None

    def haalOp(self, sectie, optie, standaard=None):
        """
        Haal een instelling op

        Args:
            sectie (str): Configuratie sectie
            optie (str): Optienaam
            standaard: Standaardwaarde als de optie niet bestaat

        Returns:
            Waarde van de optie of standaardwaarde
        """
        sectie_lower = sectie.lower()
        optie_lower = optie.lower()

        # Zoek door alle secties en opties op een hoofdletterongevoelige manier
        for config_sectie in self.config.sections():
            if config_sectie.lower() == sectie_lower:
                for config_optie in self.config.options(config_sectie):
                    if config_optie.lower() == optie_lower:
                        return self.config.get(config_sectie, config_optie)

        if standaard is None:
            return self._standaard(sectie, optie)
        return standaard

    def haalGetal(self, sectie, optie, standaard=None):
        """Haal een instelling op als float"""
        waarde = self.haalOp(sectie, optie, standaard)
        try:
            return float(waarde)
        except (TypeError, ValueError):
            logger.logWaarschuwing(f"Instelling {sectie}.{optie}='{waarde}' is geen getal")
            return float(self._standaard(sectie, optie) if standaard is None else standaard)

    def haalGeheel(self, sectie, optie, standaard=None):
        """Haal een instelling op als int"""
        return int(round(self.haalGetal(sectie, optie, standaard)))

    def haalBool(self, sectie, optie, standaard=None):
        """Haal een instelling op als bool"""
        waarde = str(self.haalOp(sectie, optie, standaard)).strip().lower()
        return waarde in ("true", "1", "ja", "yes", "on")

    def haalLijst(self, sectie, optie, standaard=None):
        """Haal een kommagescheiden lijst van getallen op"""
        waarde = self.haalOp(sectie, optie, standaard)
        return [float(deel) for deel in str(waarde).split(",") if deel.strip()]

    def slaOp(self):
        """Sla instellingen op naar bestand"""
        try:
            with open(self.configBestand, 'w', encoding='utf-8') as bestand:
                self.config.write(bestand)
        except OSError as e:
            logger.logFout(f"Kon instellingen niet opslaan: {e}")


# Singleton instance voor gebruik in de hele applicatie
instellingen = Instellingen()
