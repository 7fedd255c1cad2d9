"""
Spectral package: operatorassemblage, DtN-bundel en exacte spectra
"""
from modules.spectral.operators import (
    DiscreteMetric,
    OperatorSet,
    assemble_operators,
    dtn_matrix,
    harmonic_extension,
)
from modules.spectral.solver import (
    Spectrum,
    SpectrumKind,
    fem_tolerance,
    group_multiplicities,
    normalized_sigma,
    steklov_spectrum,
)
from modules.spectral.oracles import (
    annulus_exact_spectrum,
    first_normalized_annulus,
    first_normalized_mobius,
    mobius_exact_spectrum,
)
from modules.spectral.export import (
    eigenfunction_frame,
    export_spectrum_csv,
    spectrum_frame,
)

__all__ = [
    "DiscreteMetric",
    "OperatorSet",
    "Spectrum",
    "SpectrumKind",
    "annulus_exact_spectrum",
    "assemble_operators",
    "dtn_matrix",
    "eigenfunction_frame",
    "export_spectrum_csv",
    "fem_tolerance",
    "first_normalized_annulus",
    "first_normalized_mobius",
    "group_multiplicities",
    "harmonic_extension",
    "mobius_exact_spectrum",
    "normalized_sigma",
    "spectrum_frame",
    "steklov_spectrum",
]
