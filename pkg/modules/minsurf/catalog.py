"""
Catalogus van vrije-rand minimale oppervlakken in de eenheidsbal

Elk oppervlak is een kaart (s, θ) ↦ x ∈ ℝⁿ met analytische eerste en tweede
afgeleiden. Voor de schijf en de kegels is s de straal r ∈ [0, 1]; voor de
catenoïde en de Möbiusband is s = t ∈ [−T, T]. De Möbiuskaart [−T,T]×[0,2π)
bedekt het oppervlak twee keer (multiplicity = 2).
"""
import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Callable

import numpy as np
from scipy.optimize import bisect

from modules.fouten import InvoerFout, VerificatieFout
from modules.logger import logger


class SurfaceKind(str, Enum):
    EQUATORIAL_DISK = "equatorial_disk"
    CRITICAL_CATENOID = "critical_catenoid"
    CRITICAL_MOBIUS = "critical_mobius"
    CONE_OVER_GREAT_CIRCLE = "cone_over_great_circle"


class CriticalKind(str, Enum):
    CATENOID = "catenoid"
    MOBIUS = "mobius"


# ----------------------------------------------------------------------
# Kritieke parameters
# ----------------------------------------------------------------------
_VERGELIJKINGEN = {
    CriticalKind.CATENOID: (lambda t: t - 1.0 / math.tanh(t), (1.0, 1.5)),
    CriticalKind.MOBIUS: (lambda t: 1.0 / math.tanh(t) - 2.0 * math.tanh(2.0 * t), (0.5, 0.8)),
}


def solve_critical_parameter(kind, xtol=1e-12):
    """
    Kritieke modulus door bisectie

    catenoid: positieve wortel van t = coth t; mobius: van coth t = 2·tanh 2t.

    Args:
        kind (CriticalKind | str): "catenoid" of "mobius"
        xtol (float): Absolute tolerantie op de wortel

    Returns:
        float: T₀
    """
    kind = CriticalKind(kind)
    f, (a, b) = _VERGELIJKINGEN[kind]
    return bisect(f, a, b, xtol=xtol, maxiter=200)


def catenoid_scale(T):
    """R(T) = √(cosh²T + T²): de rand van de geschaalde catenoïde ligt op S²"""
    return math.sqrt(math.cosh(T) ** 2 + T * T)


def mobius_scale(T):
    """R(T) = √(4sinh²T + cosh²2T)"""
    return math.sqrt(4.0 * math.sinh(T) ** 2 + math.cosh(2.0 * T) ** 2)


# ----------------------------------------------------------------------
# Krommen op S²
# ----------------------------------------------------------------------
@dataclass(frozen=True, eq=False)
class SphereCurve:
    """Gesloten kromme θ ↦ γ(θ) ∈ S², θ ∈ [0, 2π)"""
    name: str
    point: Callable
    tangent: Callable
    second: Callable

    def check_on_sphere(self, steekproeven=64, tolerantie=1e-10):
        theta = 2 * np.pi * np.arange(steekproeven) / steekproeven
        afwijking = float(np.max(np.abs(np.linalg.norm(self.point(theta), axis=-1) - 1.0)))
        if afwijking > tolerantie:
            raise InvoerFout("Kromme ligt niet op de bol", kromme=self.name, afwijking=afwijking)
        return afwijking


def _loodrechte_basis(pool):
    """Orthonormale e1, e2 loodrecht op de eenheidsvector pool"""
    pool = np.asarray(pool, dtype=float)
    pool = pool / np.linalg.norm(pool)
    as_index = int(np.argmin(np.abs(pool)))
    hulp = np.zeros(3)
    hulp[as_index] = 1.0
    e1 = hulp - np.dot(hulp, pool) * pool
    e1 /= np.linalg.norm(e1)
    e2 = np.cross(pool, e1)
    return e1, e2


def great_circle(pole=(0.0, 0.0, 1.0)):
    """Grootcirkel met polen ±pole"""
    e1, e2 = _loodrechte_basis(pole)

    def punt(theta):
        theta = np.asarray(theta)[..., None]
        return np.cos(theta) * e1 + np.sin(theta) * e2

    def raak(theta):
        theta = np.asarray(theta)[..., None]
        return -np.sin(theta) * e1 + np.cos(theta) * e2

    return SphereCurve(f"grootcirkel{tuple(np.round(pole, 6))}", punt, raak, lambda theta: -punt(theta))


def latitude_circle(height):
    """Breedtecirkel op hoogte z = height (geen geodeet als height ≠ 0)"""
    if not -1.0 < height < 1.0:
        raise InvoerFout("Hoogte van de breedtecirkel moet in (−1, 1) liggen", hoogte=height)
    straal = math.sqrt(1.0 - height * height)

    def punt(theta):
        theta = np.asarray(theta)
        return np.stack([straal * np.cos(theta), straal * np.sin(theta), np.full_like(theta, height, dtype=float)],
                        axis=-1)

    def raak(theta):
        theta = np.asarray(theta)
        return np.stack([-straal * np.sin(theta), straal * np.cos(theta), np.zeros_like(theta, dtype=float)], axis=-1)

    def tweede(theta):
        theta = np.asarray(theta)
        return np.stack([-straal * np.cos(theta), -straal * np.sin(theta), np.zeros_like(theta, dtype=float)],
                        axis=-1)

    return SphereCurve(f"breedtecirkel(z={height})", punt, raak, tweede)


# ----------------------------------------------------------------------
# Geparametriseerde oppervlakken
# ----------------------------------------------------------------------
@dataclass(frozen=True, eq=False)
class ParametrizedSurface:
    """
    Kaart (s, θ) ↦ x ∈ ℝⁿ met analytische afgeleiden

    Attributes:
        name (str): Naam voor rapporten
        n (int): Omgevingsdimensie
        s_range (tuple): (a, b) bereik van s
        boundary_rows (tuple): (s, teken) per randrij; teken +1 als de rand bij toenemende s ligt
        multiplicity (int): Hoe vaak de kaart het oppervlak bedekt
        point, d_s, d_theta (callable): x en eerste afgeleiden, vorm (..., n)
        second (callable): (x_ss, x_sθ, x_θθ) of None
        unit_normal (callable): eenheidsnormaal (codimensie 1) of None
        second_fundamental_norm2 (callable): |A|² of None
        singular_s (tuple): s-waarden waar de geïnduceerde metriek ontaardt
        free_boundary (bool): Kritiek vrije-rand oppervlak
        k (int): Dimensie van het oppervlak
        modulus (float): Afkapping T (catenoïde/Möbius)
    """
    name: str
    n: int
    s_range: tuple
    boundary_rows: tuple
    multiplicity: int
    point: Callable
    d_s: Callable
    d_theta: Callable
    second: Callable = None
    unit_normal: Callable = None
    second_fundamental_norm2: Callable = None
    singular_s: tuple = ()
    free_boundary: bool = False
    k: int = 2
    modulus: float = None

    def metric(self, s, theta):
        """Eerste fundamentaalvorm (E, F, G)"""
        xs, xt = self.d_s(s, theta), self.d_theta(s, theta)
        return (np.sum(xs * xs, axis=-1), np.sum(xs * xt, axis=-1), np.sum(xt * xt, axis=-1))

    def area_element(self, s, theta):
        E, F, G = self.metric(s, theta)
        return np.sqrt(np.maximum(E * G - F * F, 0.0))

    def conormal(self, s, theta, teken):
        """Naar buiten gerichte eenheidsconormaal op een randrij"""
        xs, xt = self.d_s(s, theta), self.d_theta(s, theta)
        projectie = np.sum(xs * xt, axis=-1) / np.sum(xt * xt, axis=-1)
        eta = xs - projectie[..., None] * xt
        return teken * eta / np.linalg.norm(eta, axis=-1)[..., None]

    def normal_projection(self, s, theta, vectoren):
        """
        Component van vectoren loodrecht op het raakvlak

        Raises:
            VerificatieFout: Als de geïnduceerde metriek ontaardt
        """
        xs, xt = self.d_s(s, theta), self.d_theta(s, theta)
        E, F, G = np.sum(xs * xs, -1), np.sum(xs * xt, -1), np.sum(xt * xt, -1)
        det = E * G - F * F
        if np.any(det <= 1e-14 * np.maximum(1.0, E * G)):
            slecht = np.unravel_index(int(np.argmin(det)), np.shape(det))
            raise VerificatieFout("Geïnduceerde metriek ontaardt in een steekproefpunt",
                                  oppervlak=self.name, s=float(np.broadcast_to(s, det.shape)[slecht]),
                                  theta=float(np.broadcast_to(theta, det.shape)[slecht]))
        a = np.sum(vectoren * xs, -1)
        b = np.sum(vectoren * xt, -1)
        c1 = (G * a - F * b) / det
        c2 = (E * b - F * a) / det
        return vectoren - c1[..., None] * xs - c2[..., None] * xt


def _stapel(*componenten):
    return np.stack(np.broadcast_arrays(*componenten), axis=-1)


def equatorial_disk():
    """Equatoriale schijf in B³ in poolkaart (r, θ)"""
    def nul(r, th):
        return np.zeros(np.broadcast(r, th).shape)

    def punt(r, th):
        return _stapel(r * np.cos(th), r * np.sin(th), nul(r, th))

    def tweede(r, th):
        return (
            _stapel(nul(r, th), nul(r, th), nul(r, th)),
            _stapel(-np.sin(th) + 0 * r, np.cos(th) + 0 * r, nul(r, th)),
            _stapel(-r * np.cos(th), -r * np.sin(th), nul(r, th)),
        )

    return ParametrizedSurface(
        name=SurfaceKind.EQUATORIAL_DISK.value,
        n=3,
        s_range=(0.0, 1.0),
        boundary_rows=((1.0, 1),),
        multiplicity=1,
        point=punt,
        d_s=lambda r, th: _stapel(np.cos(th) + 0 * r, np.sin(th) + 0 * r, nul(r, th)),
        d_theta=lambda r, th: _stapel(-r * np.sin(th), r * np.cos(th), nul(r, th)),
        second=tweede,
        unit_normal=lambda r, th: _stapel(nul(r, th), nul(r, th), nul(r, th) + 1.0),
        second_fundamental_norm2=nul,
        singular_s=(0.0,),
        free_boundary=True,
    )


def catenoid_surface(T, scale=None):
    """
    Catenoïde (cosh t cos θ, cosh t sin θ, t)/R afgekapt op [−T, T]

    Met de standaardschaal R(T) ligt de rand op S²; alleen bij T = T₀ snijdt het
    oppervlak de bol loodrecht.
    """
    if not T > 0:
        raise InvoerFout("Afkapping T moet positief zijn", T=T)
    R = catenoid_scale(T) if scale is None else float(scale)

    def punt(t, th):
        return _stapel(np.cosh(t) * np.cos(th), np.cosh(t) * np.sin(th), t + 0 * th) / R

    def tweede(t, th):
        return (
            _stapel(np.cosh(t) * np.cos(th), np.cosh(t) * np.sin(th), 0 * t + 0 * th) / R,
            _stapel(-np.sinh(t) * np.sin(th), np.sinh(t) * np.cos(th), 0 * t + 0 * th) / R,
            _stapel(-np.cosh(t) * np.cos(th), -np.cosh(t) * np.sin(th), 0 * t + 0 * th) / R,
        )

    return ParametrizedSurface(
        name=f"catenoid(T={T:.10g})",
        n=3,
        s_range=(-T, T),
        boundary_rows=((-T, -1), (T, 1)),
        multiplicity=1,
        point=punt,
        d_s=lambda t, th: _stapel(np.sinh(t) * np.cos(th), np.sinh(t) * np.sin(th), 1.0 + 0 * t + 0 * th) / R,
        d_theta=lambda t, th: _stapel(-np.cosh(t) * np.sin(th), np.cosh(t) * np.cos(th), 0 * t + 0 * th) / R,
        second=tweede,
        unit_normal=lambda t, th: _stapel(np.cos(th) / np.cosh(t), np.sin(th) / np.cosh(t), -np.tanh(t) + 0 * th),
        second_fundamental_norm2=lambda t, th: 2.0 * R * R / np.cosh(t) ** 4 + 0 * th,
        free_boundary=False,
        modulus=float(T),
    )


def mobius_surface(T, scale=None):
    """
    Minimale Möbiusband (2sinh t cos θ, 2sinh t sin θ, cosh 2t cos 2θ, cosh 2t sin 2θ)/R in ℝ⁴

    De kaart is conform met λ² = (4sinh²t + 4cosh²2t)/R² en bedekt de band twee keer.
    """
    if not T > 0:
        raise InvoerFout("Afkapping T moet positief zijn", T=T)
    R = mobius_scale(T) if scale is None else float(scale)

    def punt(t, th):
        return _stapel(2 * np.sinh(t) * np.cos(th), 2 * np.sinh(t) * np.sin(th),
                       np.cosh(2 * t) * np.cos(2 * th), np.cosh(2 * t) * np.sin(2 * th)) / R

    def d_s(t, th):
        return _stapel(2 * np.cosh(t) * np.cos(th), 2 * np.cosh(t) * np.sin(th),
                       2 * np.sinh(2 * t) * np.cos(2 * th), 2 * np.sinh(2 * t) * np.sin(2 * th)) / R

    def d_theta(t, th):
        return _stapel(-2 * np.sinh(t) * np.sin(th), 2 * np.sinh(t) * np.cos(th),
                       -2 * np.cosh(2 * t) * np.sin(2 * th), 2 * np.cosh(2 * t) * np.cos(2 * th)) / R

    def tweede(t, th):
        x_tt = _stapel(2 * np.sinh(t) * np.cos(th), 2 * np.sinh(t) * np.sin(th),
                       4 * np.cosh(2 * t) * np.cos(2 * th), 4 * np.cosh(2 * t) * np.sin(2 * th)) / R
        x_tth = _stapel(-2 * np.cosh(t) * np.sin(th), 2 * np.cosh(t) * np.cos(th),
                        -4 * np.sinh(2 * t) * np.sin(2 * th), 4 * np.sinh(2 * t) * np.cos(2 * th)) / R
        return x_tt, x_tth, -x_tt

    return ParametrizedSurface(
        name=f"mobius(T={T:.10g})",
        n=4,
        s_range=(-T, T),
        boundary_rows=((-T, -1), (T, 1)),
        multiplicity=2,
        point=punt,
        d_s=d_s,
        d_theta=d_theta,
        second=tweede,
        free_boundary=False,
        modulus=float(T),
    )


def cone_surface(curve):
    """
    Kegel (r, θ) ↦ r·γ(θ) over een kromme in S²

    Minimaal precies als γ een grootcirkel is; de top r = 0 is singulier.
    De normaal γ × γ' hangt niet van r af en |A|² = ⟨γ'', N⟩² / (r²|γ'|⁴).
    """
    def tweede(r, th):
        r_ = np.asarray(r)[..., None]
        nul = np.zeros(np.broadcast(r, th).shape + (3,))
        return nul, curve.tangent(th) + 0 * r_, r_ * curve.second(th)

    def normaal(r, th):
        n = np.cross(curve.point(th), curve.tangent(th))
        n = n / np.linalg.norm(n, axis=-1)[..., None]
        return n + 0 * np.asarray(r)[..., None]

    def a_kwadraat(r, th):
        raak = curve.tangent(th)
        h = np.sum(curve.second(th) * normaal(1.0, th), axis=-1)
        return h ** 2 / (np.asarray(r) ** 2 * np.sum(raak * raak, axis=-1) ** 2)

    return ParametrizedSurface(
        name=f"cone({curve.name})",
        n=3,
        s_range=(0.0, 1.0),
        boundary_rows=((1.0, 1),),
        multiplicity=1,
        point=lambda r, th: np.asarray(r)[..., None] * curve.point(th),
        d_s=lambda r, th: curve.point(th) + 0 * np.asarray(r)[..., None],
        d_theta=lambda r, th: np.asarray(r)[..., None] * curve.tangent(th),
        second=tweede,
        unit_normal=normaal,
        second_fundamental_norm2=a_kwadraat,
        singular_s=(0.0,),
        free_boundary=False,
    )


def critical_catenoid():
    T0 = solve_critical_parameter(CriticalKind.CATENOID)
    return _als_kritiek(catenoid_surface(T0), SurfaceKind.CRITICAL_CATENOID)


def critical_mobius():
    T0 = solve_critical_parameter(CriticalKind.MOBIUS)
    return _als_kritiek(mobius_surface(T0), SurfaceKind.CRITICAL_MOBIUS)


def _als_kritiek(oppervlak, soort):
    return replace(oppervlak, name=soort.value, free_boundary=True)


def critical_catenoid_density():
    """
    Randdichtheid van de geïnduceerde catenoïdemetriek op de platte annuluskaart

    Gelijk aan cosh T₀ / R₀ = 1/T₀; daarmee is de eerste Steklov-eigenwaarde 1.
    """
    T0 = solve_critical_parameter(CriticalKind.CATENOID)
    return math.cosh(T0) / catenoid_scale(T0)


def catalog_surface(kind):
    """
    Oppervlak uit de catalogus

    Args:
        kind (SurfaceKind | str): equatorial_disk, critical_catenoid, critical_mobius
            of cone_over_great_circle

    Returns:
        ParametrizedSurface: Het oppervlak, geschaald zodat de rand op de bol ligt
    """
    try:
        kind = SurfaceKind(kind)
    except ValueError:
        logger.logFout(f"Onbekend catalogusoppervlak: {kind}")
        raise InvoerFout("Onbekend catalogusoppervlak", kind=kind) from None
    if kind == SurfaceKind.EQUATORIAL_DISK:
        return equatorial_disk()
    if kind == SurfaceKind.CRITICAL_CATENOID:
        return critical_catenoid()
    if kind == SurfaceKind.CRITICAL_MOBIUS:
        return critical_mobius()
    kegel = cone_surface(great_circle((0.0, 0.0, 1.0)))
    return replace(kegel, name=SurfaceKind.CONE_OVER_GREAT_CIRCLE.value, free_boundary=True)
