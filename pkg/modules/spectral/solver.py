"""
Steklov-spectra uit de DtN-bundel
"""
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.linalg import eigh

from modules.fouten import InvoerFout, SpectraalFout
from modules.logger import logger
from modules.settings import instellingen
from modules.spectral.operators import assemble_operators, harmonic_extension


class SpectrumKind(str, Enum):
    STEKLOV = "steklov"
    LAPLACE_FLAT_TORUS = "laplace_flat_torus"


@dataclass(frozen=True, eq=False)
class Spectrum:
    """
    Oplopende eigenwaarden met multipliciteitsgroepen

    Attributes:
        kind (SpectrumKind): Soort probleem
        values (ndarray): Oplopende eigenwaarden
        groups (ndarray): Groepsindex per eigenwaarde (gelijke index = één multipliciteitsgroep)
        functions (ndarray): (n_dof, count) eigenfuncties, None voor exacte spectra
        boundary_functions (ndarray): (n_b, count) randwaarden, orthonormaal in de randmassa
        boundary_length (float): Randlengte L van het model
        labels (tuple): Modusnamen (exacte spectra)
        tolerance (float): Relatieve groeperingstolerantie
    """
    kind: SpectrumKind
    values: np.ndarray
    groups: np.ndarray
    functions: np.ndarray = None
    boundary_functions: np.ndarray = None
    boundary_length: float = None
    labels: tuple = ()
    tolerance: float = 0.0

    def __len__(self):
        return len(self.values)

    def multiplicity(self, index):
        """Grootte van de multipliciteitsgroep van eigenwaarde index"""
        return int(np.count_nonzero(self.groups == self.groups[index]))

    def cluster(self, index):
        """Indices in dezelfde multipliciteitsgroep als index"""
        return np.flatnonzero(self.groups == self.groups[index])

    def group_sizes(self):
        _, tellingen = np.unique(self.groups, return_counts=True)
        return tellingen


def group_multiplicities(values, rel_tol):
    """
    Groepeer oplopende waarden met een relatieve sprongtolerantie

    Opeenvolgende waarden a ≤ b komen in dezelfde groep als b − a ≤ rel_tol·max(|a|, |b|).
    Nul wordt dus nooit gegroepeerd met een van nul verschillende waarde.

    Returns:
        ndarray: Groepsindex per waarde
    """
    values = np.asarray(values, dtype=float)
    groepen = np.zeros(len(values), dtype=np.int64)
    for i in range(1, len(values)):
        schaal = max(abs(values[i]), abs(values[i - 1]))
        zelfde = (values[i] - values[i - 1]) <= rel_tol * schaal
        groepen[i] = groepen[i - 1] if zelfde else groepen[i - 1] + 1
    return groepen


def _vaste_teken(vectoren):
    """Eerste component met betekenisvolle grootte positief per kolom"""
    vectoren = np.array(vectoren, copy=True)
    for j in range(vectoren.shape[1]):
        kolom = vectoren[:, j]
        drempel = 1e-10 * np.max(np.abs(kolom))
        eerste = np.flatnonzero(np.abs(kolom) > drempel)
        if eerste.size and kolom[eerste[0]] < 0:
            vectoren[:, j] = -kolom
    return vectoren


def fem_tolerance(mesh):
    """Relatieve groeperingstolerantie 10·(h_b²/12) voor FEM-spectra"""
    factor = instellingen.haalGetal("Spectraal", "fem_groeperingsfactor")
    h = float(np.max(mesh.boundary_edge_lengths))
    return factor * h * h / 12.0


def steklov_spectrum(mesh, metric, count, ops=None):
    """
    Los de bundel dtn·φ = σ·M_b·φ op

    Args:
        mesh (TriangleMesh): Geldig net
        metric (DiscreteMetric): Metriek en randdichtheid
        count (int): Aantal eigenparen
        ops (OperatorSet): Reeds geassembleerde operatoren (optioneel)

    Returns:
        Spectrum: Oplopende eigenparen, eigenfuncties harmonisch uitgebreid

    Raises:
        InvoerFout: Als count groter is dan het aantal randvrijheidsgraden
    """
    n_b = len(mesh.boundary_dofs)
    if count < 1 or count > n_b:
        logger.logFout(f"Aantal eigenwaarden {count} buiten bereik (1..{n_b})")
        raise InvoerFout("Aantal eigenwaarden buiten bereik", count=count, randvrijheidsgraden=n_b)
    if ops is None:
        ops = assemble_operators(mesh, metric)

    D = ops.dtn
    gewichten = ops.boundary_weights
    try:
        waarden, vectoren = eigh(D, np.diag(gewichten), subset_by_index=[0, count - 1])
    except np.linalg.LinAlgError as e:
        raise SpectraalFout("Eigenoplossing van de DtN-bundel mislukt", fout=str(e)) from e

    vectoren = _vaste_teken(vectoren)
    tolerantie = fem_tolerance(mesh)
    spectrum = Spectrum(
        kind=SpectrumKind.STEKLOV,
        values=waarden,
        groups=group_multiplicities(waarden, tolerantie),
        functions=harmonic_extension(ops, vectoren),
        boundary_functions=vectoren,
        boundary_length=ops.boundary_length,
        tolerance=tolerantie,
    )
    logger.logActie(f"Steklov-spectrum ({mesh.kind.value}): " +
                    ", ".join(f"{w:.6f}" for w in waarden[:min(count, 6)]))
    return spectrum


def normalized_sigma(spectrum, boundary_length, k):
    """
    Genormaliseerde eigenwaarde σ_k·L

    Raises:
        InvoerFout: Als k buiten 1..len(spectrum)−1 valt
    """
    if k < 1 or k >= len(spectrum.values):
        raise InvoerFout("Index k buiten bereik van het spectrum", k=k, aantal=len(spectrum.values))
    if not boundary_length > 0:
        raise InvoerFout("Randlengte moet positief zijn", L=boundary_length)
    return float(spectrum.values[k] * boundary_length)
