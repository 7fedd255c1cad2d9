"""
Maximalisatie van σ₁L over de modulus van de vlakke annulus en Möbiusband
"""
import math
from dataclasses import dataclass
from enum import Enum

import pandas as pd

from modules.fouten import InvoerFout
from modules.logger import logger
from modules.settings import instellingen
from modules.spectral import first_normalized_annulus, first_normalized_mobius

GULDEN = (math.sqrt(5.0) - 1.0) / 2.0


class ModulusFamily(str, Enum):
    ANNULUS = "annulus"
    MOBIUS = "mobius"


STANDAARD_INTERVAL = {
    ModulusFamily.ANNULUS: (0.5, 3.0),
    ModulusFamily.MOBIUS: (0.2, 2.0),
}

_DOELFUNCTIE = {
    ModulusFamily.ANNULUS: first_normalized_annulus,
    ModulusFamily.MOBIUS: first_normalized_mobius,
}


@dataclass(frozen=True)
class ModulusResult:
    """
    Resultaat van de modulusmaximalisatie

    Attributes:
        family (ModulusFamily): annulus of mobius
        T_star (float): Maximaliserende modulus
        value (float): σ₁(T*)·L
        bracket (tuple): Zoekinterval
        boundary_maximum (bool): Maximum ligt op de rand van het interval
        evaluations (int): Aantal functie-evaluaties
    """
    family: ModulusFamily
    T_star: float
    value: float
    bracket: tuple
    boundary_maximum: bool
    evaluations: int

    def __iter__(self):
        return iter((self.T_star, self.value))


def _familie(family):
    try:
        return ModulusFamily(family)
    except ValueError as e:
        raise InvoerFout("Onbekende modulusfamilie", familie=family,
                         geldig=[f.value for f in ModulusFamily]) from e


def golden_section_max(functie, a, b, tolerantie):
    """
    Gulden-snedezoektocht naar het maximum van een unimodale functie op [a, b]

    Alleen inwendige punten worden geëvalueerd; de eindpunten zelf nooit.

    Returns:
        tuple: (x*, f(x*), aantal evaluaties)

    Raises:
        InvoerFout: Als niet a < b
    """
    if not a < b:
        raise InvoerFout("Zoekinterval moet niet-leeg zijn", a=a, b=b)
    x1 = b - GULDEN * (b - a)
    x2 = a + GULDEN * (b - a)
    f1, f2 = functie(x1), functie(x2)
    evaluaties = 2
    while b - a > tolerantie:
        if f1 >= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - GULDEN * (b - a)
            f1 = functie(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + GULDEN * (b - a)
            f2 = functie(x2)
        evaluaties += 1
    x = 0.5 * (a + b)
    return x, functie(x), evaluaties + 1


def maximize_over_modulus(family, bracket=None, tolerantie=None):
    """
    Maximaliseer T ↦ σ₁(T)·L met de exacte spectra

    Args:
        family (str): "annulus" of "mobius"
        bracket (tuple): Positief zoekinterval (a, b); standaard per familie
        tolerantie (float): Eindbreedte van het interval

    Returns:
        ModulusResult: T*, waarde en een vlag als het maximum op de intervalrand ligt

    Raises:
        InvoerFout: Bij een onbekende familie of een niet-positief interval
    """
    familie = _familie(family)
    a, b = bracket if bracket is not None else STANDAARD_INTERVAL[familie]
    a, b = float(a), float(b)
    if not (0.0 < a < b):
        logger.logFout(f"Ongeldig modulusinterval ({a}, {b})")
        raise InvoerFout("Modulusinterval moet positief en niet-leeg zijn", a=a, b=b)
    if tolerantie is None:
        tolerantie = instellingen.haalGetal("Optimalisatie", "lijnzoektolerantie")

    T, waarde, evaluaties = golden_section_max(_DOELFUNCTIE[familie], a, b, tolerantie)
    marge = max(10 * tolerantie, 1e-9 * (b - a))
    op_rand = (T - a) <= marge or (b - T) <= marge
    if op_rand:
        logger.logWaarschuwing(f"Maximum van σ₁L ({familie.value}) ligt op de rand van ({a}, {b}); "
                               f"het interval bevat het kritieke punt niet")
    logger.logActie(f"Modulus {familie.value}: T* = {T:.10f}, σ₁L = {waarde:.10f} ({evaluaties} evaluaties)")
    return ModulusResult(family=familie, T_star=T, value=waarde, bracket=(a, b),
                         boundary_maximum=op_rand, evaluations=evaluaties)


def scan_modulus(family, values):
    """
    Plotdata T tegen σ₁L

    Returns:
        DataFrame: kolommen T, sigma1L
    """
    familie = _familie(family)
    functie = _DOELFUNCTIE[familie]
    waarden = [float(T) for T in values]
    if any(T <= 0 for T in waarden):
        raise InvoerFout("Moduli moeten positief zijn", familie=familie.value)
    return pd.DataFrame({"T": waarden, "sigma1L": [functie(T) for T in waarden]})
