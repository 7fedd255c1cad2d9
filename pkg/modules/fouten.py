"""
Foutklassen voor Steklab
Elke fout draagt naast de melding een context-dictionary met de gegevens
waarmee de mislukte controle te reproduceren is.
"""


class SteklabFout(Exception):
    """Basisklasse voor alle gestructureerde fouten"""

    def __init__(self, bericht, **context):
        """
        Args:
            bericht (str): Leesbare foutmelding
            **context: Gestructureerde details (driehoek-index, parameters, ...)
        """
        super().__init__(bericht)
        self.bericht = bericht
        self.context = context

    def __str__(self):
        if not self.context:
            return self.bericht
        details = ", ".join(f"{k}={v}" for k, v in self.context.items())
        return f"{self.bericht} ({details})"

    def alsDict(self):
        """Geef de fout als JSON-vriendelijke dictionary"""
        return {
            "type": type(self).__name__,
            "bericht": self.bericht,
            "context": {k: repr(v) if not isinstance(v, (int, float, str, bool)) else v
                        for k, v in self.context.items()},
        }


class InvoerFout(SteklabFout):
    """Een voorwaarde op de invoer is geschonden"""


class MeshFout(SteklabFout):
    """Topologie of geometrie van een driehoeksnet is ongeldig"""


class SpectraalFout(SteklabFout):
    """Assemblage of eigenwaardeprobleem mislukt"""


class KwadratuurFout(SteklabFout):
    """Gauss-Legendre kwadratuur convergeert niet"""


class ConformFout(SteklabFout):
    """Voorwaarde voor een conforme afbeelding of verificatie geschonden"""


class OptimalisatieFout(SteklabFout):
    """De optimalisatie kan niet verder"""


class VerificatieFout(SteklabFout):
    """Een numerieke controle van een stelling faalt"""
