"""
Tensor Gauss–Legendre kwadratuur met orde-verdubbeling
"""
from functools import lru_cache

import numpy as np

from modules.fouten import KwadratuurFout
from modules.logger import logger
from modules.settings import instellingen


@lru_cache(maxsize=None)
def gauss_legendre(orde):
    """Knopen en gewichten op [−1, 1]"""
    knopen, gewichten = np.polynomial.legendre.leggauss(orde)
    knopen.setflags(write=False)
    gewichten.setflags(write=False)
    return knopen, gewichten


def nodes_on(a, b, orde):
    """Knopen en gewichten verschoven naar [a, b]"""
    x, w = gauss_legendre(orde)
    half = 0.5 * (b - a)
    return 0.5 * (a + b) + half * x, half * w


def integrate_1d(f, a, b, orde):
    """∫_a^b f met een vaste orde; f werkt gevectoriseerd"""
    x, w = nodes_on(a, b, orde)
    return float(np.sum(w * f(x)))


def integrate_2d(f, s_bereik, theta_bereik, orde):
    """
    ∫∫ f(s, θ) ds dθ met een tensorregel van vaste orde

    Args:
        f (callable): f(s, θ) op arrays van gelijke vorm
        s_bereik (tuple): (a, b)
        theta_bereik (tuple): (c, d)
        orde (int): Aantal knopen per richting
    """
    s, ws = nodes_on(s_bereik[0], s_bereik[1], orde)
    th, wt = nodes_on(theta_bereik[0], theta_bereik[1], orde)
    S, TH = np.meshgrid(s, th, indexing="ij")
    return float(np.sum(np.outer(ws, wt) * f(S, TH)))


def adaptive(regel, naam="integraal", startorde=None, maxorde=None, tolerantie=None, divergentie=None):
    """
    Verdubbel de orde tot twee opeenvolgende resultaten overeenkomen

    Args:
        regel (callable): regel(orde) -> float
        naam (str): Omschrijving voor log en fout
        startorde, maxorde (int): Ordebereik, standaard uit [Kwadratuur]
        tolerantie (float): Relatieve overeenkomst waarop gestopt wordt
        divergentie (float): Verschil waarboven de laatste twee ordes als niet-convergent gelden

    Returns:
        float: Resultaat van de hoogste gebruikte orde

    Raises:
        KwadratuurFout: Als de laatste twee ordes meer dan de divergentiedrempel verschillen
    """
    startorde = startorde or instellingen.haalGeheel("Kwadratuur", "startorde")
    maxorde = maxorde or instellingen.haalGeheel("Kwadratuur", "maxorde")
    tolerantie = tolerantie or instellingen.haalGetal("Kwadratuur", "tolerantie")
    divergentie = divergentie or instellingen.haalGetal("Kwadratuur", "divergentiedrempel")

    orde = startorde
    vorige = regel(orde)
    verschil = np.inf
    while orde < maxorde:
        orde *= 2
        huidige = regel(orde)
        verschil = abs(huidige - vorige)
        if verschil <= tolerantie * max(1.0, abs(huidige)):
            return huidige
        vorige = huidige

    if verschil > divergentie * max(1.0, abs(vorige)):
        logger.logFout(f"Kwadratuur van {naam} convergeert niet (verschil {verschil:.3e} bij orde {orde})")
        raise KwadratuurFout("Kwadratuur convergeert niet", integraal=naam, orde=orde, verschil=float(verschil))
    logger.logWaarschuwing(f"Kwadratuur van {naam} haalt tolerantie niet (verschil {verschil:.3e})")
    return vorige
