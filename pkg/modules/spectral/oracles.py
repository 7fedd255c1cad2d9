"""
Exacte spectra van de platte annulus en de platte Möbiusband (scheiding van variabelen)

Annulus [−T,T]×S¹: modi 1 en t geven 0 en 1/T; cosh(nt)·{cos,sin}(nθ) en
sinh(nt)·{cos,sin}(nθ) geven n·tanh(nT) en n·coth(nT). De Möbiusband houdt alleen de
modi over die invariant zijn onder (t,θ) → (−t,θ+π): even n met cosh, oneven n met sinh.
"""
import math

import numpy as np

from modules.fouten import InvoerFout
from modules.logger import logger
from modules.settings import instellingen
from modules.spectral.solver import Spectrum, SpectrumKind, group_multiplicities


def _controleer_modulus(T, n_max):
    if not T > 0:
        logger.logFout(f"Modulus T={T} afgewezen")
        raise InvoerFout("Modulus T moet positief zijn", T=T)
    if n_max < 1:
        raise InvoerFout("n_max moet minstens 1 zijn", n_max=n_max)


def _coth(x):
    return 1.0 / math.tanh(x)


def _bouw_spectrum(modi, boundary_length):
    modi.sort(key=lambda m: (m[0], m[1]))
    waarden = np.array([m[0] for m in modi])
    tolerantie = instellingen.haalGetal("Spectraal", "oracle_groepering")
    return Spectrum(
        kind=SpectrumKind.STEKLOV,
        values=waarden,
        groups=group_multiplicities(waarden, tolerantie),
        boundary_length=boundary_length,
        labels=tuple(m[1] for m in modi),
        tolerance=tolerantie,
    )


def annulus_exact_spectrum(T, n_max=10):
    """
    Exact Steklov-spectrum van [−T,T]×S¹ met randlengte 4π

    Args:
        T (float): Modulus (halve breedte)
        n_max (int): Hoogste Fourier-frequentie

    Returns:
        Spectrum: Oplopend spectrum met modusnamen
    """
    _controleer_modulus(T, n_max)
    modi = [(0.0, "constant"), (1.0 / T, "t")]
    for n in range(1, n_max + 1):
        for deel in ("cos", "sin"):
            modi.append((n * math.tanh(n * T), f"cosh({n}t){deel}({n}θ)"))
            modi.append((n * _coth(n * T), f"sinh({n}t){deel}({n}θ)"))
    return _bouw_spectrum(modi, 4.0 * math.pi)


def mobius_exact_spectrum(T, n_max=10):
    """
    Exact Steklov-spectrum van de platte Möbiusband [−T,T]×S¹/((t,θ)≈(−t,θ+π))

    De rand is één cirkel van lengte 2π.
    """
    _controleer_modulus(T, n_max)
    modi = [(0.0, "constant")]
    for n in range(1, n_max + 1):
        for deel in ("cos", "sin"):
            if n % 2 == 0:
                modi.append((n * math.tanh(n * T), f"cosh({n}t){deel}({n}θ)"))
            else:
                modi.append((n * _coth(n * T), f"sinh({n}t){deel}({n}θ)"))
    return _bouw_spectrum(modi, 2.0 * math.pi)


def first_normalized_annulus(T):
    """σ₁·L van de platte annulus: 4π·min(tanh T, 1/T)"""
    return 4.0 * math.pi * min(math.tanh(T), 1.0 / T)


def first_normalized_mobius(T):
    """σ₁·L van de platte Möbiusband: 2π·min(coth T, 2·tanh 2T)"""
    return 2.0 * math.pi * min(_coth(T), 2.0 * math.tanh(2.0 * T))
