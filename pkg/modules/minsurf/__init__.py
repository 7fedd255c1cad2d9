"""
Minsurf package: catalogus van vrije-rand minimale oppervlakken en hun controles
"""
from modules.minsurf.catalog import (
    CriticalKind,
    ParametrizedSurface,
    SphereCurve,
    SurfaceKind,
    catalog_surface,
    catenoid_scale,
    catenoid_surface,
    cone_surface,
    critical_catenoid,
    critical_catenoid_density,
    critical_mobius,
    equatorial_disk,
    great_circle,
    latitude_circle,
    mobius_scale,
    mobius_surface,
    solve_critical_parameter,
)
from modules.minsurf.quadrature import adaptive, gauss_legendre, integrate_1d, integrate_2d
from modules.minsurf.verification import (
    FreeBoundaryReport,
    boundary_residuals,
    catenoid_pencil_check,
    geometry_checks,
    geometry_quantities,
    harmonicity_residual,
    sample_surface_csv,
    sample_surface_frame,
    verify_free_boundary,
)

__all__ = [
    "CriticalKind",
    "FreeBoundaryReport",
    "ParametrizedSurface",
    "SphereCurve",
    "SurfaceKind",
    "adaptive",
    "boundary_residuals",
    "catalog_surface",
    "catenoid_pencil_check",
    "catenoid_scale",
    "catenoid_surface",
    "cone_surface",
    "critical_catenoid",
    "critical_catenoid_density",
    "critical_mobius",
    "equatorial_disk",
    "gauss_legendre",
    "geometry_checks",
    "geometry_quantities",
    "great_circle",
    "harmonicity_residual",
    "integrate_1d",
    "integrate_2d",
    "latitude_circle",
    "mobius_scale",
    "mobius_surface",
    "sample_surface_csv",
    "sample_surface_frame",
    "solve_critical_parameter",
    "verify_free_boundary",
]
