"""
Optimize package: eigenwaardevariaties, maximalisatie van σ₁L, certificaten en vlakke tori
"""
from modules.optimize.perturbation import (
    MetricPerturbation,
    StressEnergy,
    conformally_perturbed_metric,
    finite_difference_sigma,
    mean_free,
    pencil_eigenvalues,
    perturbed_metric,
    q_form_conformal,
    q_form_metric,
    stress_energy,
)
from modules.optimize.modulus import (
    ModulusFamily,
    ModulusResult,
    golden_section_max,
    maximize_over_modulus,
    scan_modulus,
)
from modules.optimize.density import (
    BoundaryDensity,
    OptimizationReport,
    cluster_ascent_direction,
    maximize_density,
)
from modules.optimize.certificate import (
    ConformalityData,
    SphericalCertificate,
    gram_residual,
    spherical_certificate,
)
from modules.optimize.torus import (
    Lattice,
    TorusDerivative,
    flat_torus_lambda1,
    lambda1_multiplicity,
    laplace_derivative_flat_torus,
    scan_flat_tori,
    shortest_dual_vectors,
)
from modules.optimize.bounds import BoundReport, bound_checks, steklov_bound
from modules.optimize.genus0 import Genus0Report, feasible, search_genus0

__all__ = [
    "BoundReport",
    "BoundaryDensity",
    "ConformalityData",
    "Genus0Report",
    "Lattice",
    "MetricPerturbation",
    "ModulusFamily",
    "ModulusResult",
    "OptimizationReport",
    "SphericalCertificate",
    "StressEnergy",
    "TorusDerivative",
    "bound_checks",
    "cluster_ascent_direction",
    "conformally_perturbed_metric",
    "feasible",
    "finite_difference_sigma",
    "flat_torus_lambda1",
    "golden_section_max",
    "gram_residual",
    "lambda1_multiplicity",
    "laplace_derivative_flat_torus",
    "maximize_density",
    "maximize_over_modulus",
    "mean_free",
    "pencil_eigenvalues",
    "perturbed_metric",
    "q_form_conformal",
    "q_form_metric",
    "scan_flat_tori",
    "scan_modulus",
    "search_genus0",
    "shortest_dual_vectors",
    "spherical_certificate",
    "steklov_bound",
    "stress_energy",
]
