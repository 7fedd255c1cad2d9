"""
Controle van de vrije-randvoorwaarden en de globale grootheden van catalogusoppervlakken
"""
import math
from dataclasses import dataclass

import numpy as np
import pandas as pd

from modules.fouten import InvoerFout
from modules.logger import logger
from modules.mesh import DomainKind, DomainSpec, generate_domain
from modules.minsurf.catalog import (
    CriticalKind,
    critical_catenoid,
    critical_catenoid_density,
    solve_critical_parameter,
)
from modules.minsurf.quadrature import adaptive, integrate_1d, integrate_2d
from modules.spectral import DiscreteMetric, assemble_operators, fem_tolerance
from modules.spectral.export import float_format


@dataclass(frozen=True)
class FreeBoundaryReport:
    """
    Residuen van Δ_Σ x = 0, ∇_η x = x en |x| = 1, plus oppervlakte en randlengte
    """
    surface: str
    grid: int
    method: str
    harmonicity_residual: float
    boundary_condition_residual: float
    sphere_residual: float
    area: float
    boundary_length: float


def _inwendige_rooster(surface, grid):
    a, b = surface.s_range
    s = a + (b - a) * np.arange(1, grid) / grid
    for singulier in surface.singular_s:
        s = s[~np.isclose(s, singulier, atol=1e-14)]
    theta = 2 * np.pi * np.arange(grid) / grid
    return np.meshgrid(s, theta, indexing="ij")


def _tweede_afgeleiden_fd(surface, S, TH, hs, ht):
    """Centrale differenties van de tweede afgeleiden van de kaart"""
    x = surface.point
    x_ss = (x(S + hs, TH) - 2 * x(S, TH) + x(S - hs, TH)) / hs ** 2
    x_tt = (x(S, TH + ht) - 2 * x(S, TH) + x(S, TH - ht)) / ht ** 2
    x_st = (x(S + hs, TH + ht) - x(S + hs, TH - ht) - x(S - hs, TH + ht) + x(S - hs, TH - ht)) / (4 * hs * ht)
    return x_ss, x_st, x_tt


def harmonicity_residual(surface, grid, method=None):
    """
    max |Δ_Σ x| over het inwendige rooster

    Δ_Σ x is de normale component van g^{ij} x_ij; de raakcomponent is de
    Christoffelterm en valt weg.

    Args:
        surface (ParametrizedSurface): Oppervlak
        grid (int): Aantal intervallen per richting
        method (str): "analytic" (analytische tweede afgeleiden) of "fd" (centrale differenties)
    """
    method = method or ("analytic" if surface.second is not None else "fd")
    S, TH = _inwendige_rooster(surface, grid)
    if method == "analytic":
        x_ss, x_st, x_tt = surface.second(S, TH)
    elif method == "fd":
        a, b = surface.s_range
        x_ss, x_st, x_tt = _tweede_afgeleiden_fd(surface, S, TH, (b - a) / grid, 2 * np.pi / grid)
    else:
        raise InvoerFout("Onbekende methode voor de harmoniciteitscontrole", methode=method)

    E, F, G = surface.metric(S, TH)
    det = E * G - F * F
    laplace = (G[..., None] * x_ss - 2 * F[..., None] * x_st + E[..., None] * x_tt) / det[..., None]
    normaal = surface.normal_projection(S, TH, laplace)
    return float(np.max(np.linalg.norm(normaal, axis=-1)))


def boundary_residuals(surface, grid):
    """
    (max |η − x|, max ||x| − 1|) over de randrijen

    Returns:
        tuple: (randvoorwaarde-residu, bol-residu)
    """
    theta = 2 * np.pi * np.arange(grid) / grid
    randresidu, bolresidu = 0.0, 0.0
    for s_rand, teken in surface.boundary_rows:
        s = np.full_like(theta, s_rand)
        x = surface.point(s, theta)
        eta = surface.conormal(s, theta, teken)
        randresidu = max(randresidu, float(np.max(np.linalg.norm(eta - x, axis=-1))))
        bolresidu = max(bolresidu, float(np.max(np.abs(np.linalg.norm(x, axis=-1) - 1.0))))
    return randresidu, bolresidu


def geometry_quantities(surface, **kwadratuur):
    """
    Oppervlakte en randlengte door adaptieve Gauss–Legendre kwadratuur

    Returns:
        tuple: (area, boundary_length)

    Raises:
        KwadratuurFout: Als opeenvolgende ordes blijvend verschillen
    """
    oppervlakte = adaptive(
        lambda orde: integrate_2d(surface.area_element, surface.s_range, (0.0, 2 * np.pi), orde),
        naam=f"oppervlakte van {surface.name}", **kwadratuur,
    ) / surface.multiplicity

    lengte = 0.0
    for s_rand, _ in surface.boundary_rows:
        def snelheid(theta, s_rand=s_rand):
            return np.linalg.norm(surface.d_theta(np.full_like(theta, s_rand), theta), axis=-1)
        lengte += adaptive(lambda orde: integrate_1d(snelheid, 0.0, 2 * np.pi, orde),
                           naam=f"randlengte van {surface.name}", **kwadratuur)
    lengte /= surface.multiplicity
    return oppervlakte, lengte


def geometry_checks(surface, area, boundary_length, tolerantie=1e-10):
    """
    Globale identiteiten: |∂Σ| = 2|Σ|, |Σ| ≥ π en |Σ| ≤ |∂Σ|²/4π

    De eerste twee gelden voor vrije-rand oppervlakken; de isoperimetrische
    ongelijkheid wordt altijd gerapporteerd.

    Returns:
        list: dicts met check, lhs, rhs, residual, pass
    """
    controles = []
    if surface.free_boundary:
        verhouding = abs(boundary_length - 2 * area) / (2 * area)
        controles.append({"check": "rand_gelijk_aan_twee_keer_oppervlakte", "lhs": boundary_length,
                          "rhs": 2 * area, "residual": verhouding, "pass": verhouding <= 5e-3})
        controles.append({"check": "oppervlakte_minstens_pi", "lhs": area, "rhs": math.pi,
                          "residual": max(0.0, math.pi - area), "pass": area >= math.pi - 1e-6})
    grens = boundary_length ** 2 / (4 * math.pi)
    controles.append({"check": "isoperimetrisch", "lhs": area, "rhs": grens,
                      "residual": max(0.0, area - grens), "pass": area <= grens + tolerantie})
    return controles


def verify_free_boundary(surface, grid, method=None):
    """
    Controleer de vrije-randvoorwaarden van een oppervlak

    Args:
        surface (ParametrizedSurface): Catalogusoppervlak
        grid (int): Roosterresolutie (≥ 8)
        method (str): "analytic" of "fd" voor de harmoniciteit

    Returns:
        FreeBoundaryReport: Residuen in maximumnorm en de globale grootheden

    Raises:
        InvoerFout: Als grid < 8
        VerificatieFout: Bij een ontaarde geïnduceerde metriek
    """
    if grid < 8:
        logger.logFout(f"Rooster {grid} te grof voor vrije-randcontrole")
        raise InvoerFout("Rooster moet minstens 8 zijn", grid=grid)
    method = method or ("analytic" if surface.second is not None else "fd")
    harmonisch = harmonicity_residual(surface, grid, method)
    randresidu, bolresidu = boundary_residuals(surface, grid)
    oppervlakte, lengte = geometry_quantities(surface)
    rapport = FreeBoundaryReport(
        surface=surface.name,
        grid=grid,
        method=method,
        harmonicity_residual=harmonisch,
        boundary_condition_residual=randresidu,
        sphere_residual=bolresidu,
        area=oppervlakte,
        boundary_length=lengte,
    )
    logger.logActie(f"Vrije rand {surface.name} (rooster {grid}, {method}): Δx={harmonisch:.3e}, "
                    f"η−x={randresidu:.3e}, |x|−1={bolresidu:.3e}")
    return rapport


def catenoid_pencil_check(resolution=8):
    """
    Catenoïdecoördinaten als discrete Steklov-eigenfuncties

    Bemonstert x₁, x₂, x₃ van de kritieke catenoïde op het annulusnet met modulus T₀
    en randdichtheid 1/T₀ en meet de Rayleigh-quotiënten in de DtN-bundel.

    Returns:
        dict: rayleigh (3 quotiënten), afwijking (max |q − 1|), tolerantie (FEM)
    """
    T0 = solve_critical_parameter(CriticalKind.CATENOID)
    mesh = generate_domain(DomainSpec(DomainKind.ANNULUS, modulus=T0, resolution=resolution))
    dichtheid = np.full(len(mesh.boundary_dofs), critical_catenoid_density())
    ops = assemble_operators(mesh, DiscreteMetric.euclidean(mesh, dichtheid))

    kaart = mesh.dof_coordinates()[mesh.boundary_dofs]
    x = critical_catenoid().point(kaart[:, 0], kaart[:, 1])
    D, M = ops.dtn, ops.boundary_weights
    quotienten = [float(x[:, i] @ D @ x[:, i] / (x[:, i] @ (M * x[:, i]))) for i in range(3)]
    afwijking = max(abs(q - 1.0) for q in quotienten)
    logger.logActie(f"Catenoïde in de DtN-bundel: Rayleigh {quotienten}")
    return {"rayleigh": quotienten, "afwijking": afwijking, "tolerantie": fem_tolerance(mesh)}


def sample_surface_frame(surface, grid):
    """Bemonstering (t, θ, x1..xn) voor externe plots"""
    a, b = surface.s_range
    s = a + (b - a) * np.arange(grid + 1) / grid
    theta = 2 * np.pi * np.arange(grid) / grid
    S, TH = np.meshgrid(s, theta, indexing="ij")
    x = surface.point(S, TH).reshape(-1, surface.n)
    frame = pd.DataFrame({"t": S.ravel(), "theta": TH.ravel()})
    for i in range(surface.n):
        frame[f"x{i + 1}"] = x[:, i]
    return frame


def sample_surface_csv(surface, grid, pad):
    sample_surface_frame(surface, grid).to_csv(pad, index=False, float_format=float_format())
