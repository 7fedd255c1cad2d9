"""
CSV-export van spectra en eigenfuncties via pandas
"""
import pandas as pd

from modules.fouten import InvoerFout
from modules.settings import instellingen


def float_format():
    """printf-formaat voor het ingestelde aantal significante cijfers"""
    cijfers = instellingen.haalGeheel("Uitvoer", "significante_cijfers")
    return f"%.{cijfers - 1}e"


def spectrum_frame(spectrum):
    """Tabel (index, eigenvalue, multiplicity_group[, mode])"""
    frame = pd.DataFrame({
        "index": range(len(spectrum.values)),
        "eigenvalue": spectrum.values,
        "multiplicity_group": spectrum.groups,
    })
    if spectrum.labels:
        frame["mode"] = list(spectrum.labels)
    return frame


def eigenfunction_frame(spectrum, mesh):
    """
    Eigenfuncties per punt, gesleuteld op de canonieke punt-id

    Args:
        spectrum (Spectrum): FEM-spectrum met functies
        mesh (TriangleMesh): Het net waarop het spectrum is berekend

    Returns:
        DataFrame: kolommen vertex, x, y, u0, u1, ...
    """
    if spectrum.functions is None:
        raise InvoerFout("Spectrum bevat geen eigenfuncties", kind=spectrum.kind.value)
    coordinaten = mesh.dof_coordinates()
    frame = pd.DataFrame({
        "vertex": mesh.dof_vertices,
        "x": coordinaten[:, 0],
        "y": coordinaten[:, 1],
    })
    for j in range(spectrum.functions.shape[1]):
        frame[f"u{j}"] = spectrum.functions[:, j]
    return frame


def export_spectrum_csv(spectrum, pad):
    spectrum_frame(spectrum).to_csv(pad, index=False, float_format=float_format())
