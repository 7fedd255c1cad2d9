"""
Numerieke controle van de variationele stellingen voor conforme transformaties

Randlengte onder een conforme afbeelding, de eerste-variatie-identiteiten voor
V = (x−y)/|x−y|², de tweede afgeleide van de randlengte langs een flow en de
indexvorm in normale richting.
"""
from dataclasses import dataclass, field

import numpy as np

from modules.conformal.ball_maps import (
    BallConformalMap,
    flow_map,
    magnification,
    random_unit_vector,
)
from modules.fouten import ConformFout, InvoerFout
from modules.helpers import maak_rng
from modules.logger import logger
from modules.minsurf.quadrature import adaptive, integrate_1d, integrate_2d
from modules.settings import instellingen


@dataclass
class VerificationRecord:
    """Resultaat van één stellingcontrole"""
    theorem_id: str
    surface: str
    parameters: dict = field(default_factory=dict)
    lhs: float = 0.0
    rhs: float = 0.0
    residual: float = 0.0
    passed: bool = False
    evidence_only: bool = False

    def alsDict(self):
        return {
            "theorem_id": self.theorem_id,
            "surface": self.surface,
            "parameters": self.parameters,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "residual": self.residual,
            "pass": bool(self.passed),
            "evidence_only": self.evidence_only,
        }


def _controleer_dimensie(surface, f):
    if surface.n != f.n:
        raise InvoerFout("Oppervlak en afbeelding hebben verschillende dimensies", oppervlak=surface.n, afbeelding=f.n)


def _randintegraal(surface, integrand, orde=None, naam="randintegraal"):
    """
    Σ over randrijen van ∫ integrand(x, |x_θ|) dθ, gedeeld door de kaartmultipliciteit

    integrand krijgt de punten x (m, n) en de snelheid |x_θ| (m,).
    """
    totaal = 0.0
    for s_rand, _ in surface.boundary_rows:
        def f(theta, s_rand=s_rand):
            s = np.full_like(theta, s_rand)
            return integrand(surface.point(s, theta), np.linalg.norm(surface.d_theta(s, theta), axis=-1))
        if orde is None:
            totaal += adaptive(lambda o: integrate_1d(f, 0.0, 2 * np.pi, o), naam=naam)
        else:
            totaal += integrate_1d(f, 0.0, 2 * np.pi, orde)
    return totaal / surface.multiplicity


def _oppervlakte_integraal(surface, integrand, orde=None, naam="oppervlakte-integraal"):
    """∫_Σ integrand(s, θ) dA over de kaart, gedeeld door de multipliciteit"""
    def f(S, TH):
        return integrand(S, TH) * surface.area_element(S, TH)
    if orde is None:
        waarde = adaptive(lambda o: integrate_2d(f, surface.s_range, (0.0, 2 * np.pi), o), naam=naam)
    else:
        waarde = integrate_2d(f, surface.s_range, (0.0, 2 * np.pi), orde)
    return waarde / surface.multiplicity


def image_boundary_length(surface, f, orde=None):
    """
    |f(∂Σ)| = ∫_{∂Σ} u ds met u de vergrotingsfactor van f

    Args:
        surface (ParametrizedSurface): Oppervlak met rand op de bol
        f (BallConformalMap): Conforme afbeelding
        orde (int): Vaste Gauss–Legendre orde, standaard adaptief

    Raises:
        KwadratuurFout: Als de adaptieve kwadratuur niet convergeert
    """
    _controleer_dimensie(surface, f)
    return _randintegraal(surface, lambda x, snelheid: magnification(f, x) * snelheid, orde,
                          naam=f"|f(∂Σ)| van {surface.name}")


def spherical_conformal_length(curve, f, orde=None):
    """
    Lengte van het beeld van een gesloten kromme op S² onder f

    Raises:
        InvoerFout: Als de kromme niet op de bol ligt
    """
    if f.n != 3:
        raise InvoerFout("Krommen op S² vereisen een afbeelding van B³", n=f.n)
    curve.check_on_sphere()

    def integrand(theta):
        return magnification(f, curve.point(theta)) * np.linalg.norm(curve.tangent(theta), axis=-1)

    if orde is not None:
        return integrate_1d(integrand, 0.0, 2 * np.pi, orde)
    return adaptive(lambda o: integrate_1d(integrand, 0.0, 2 * np.pi, o), naam=f"lengte van {curve.name}")


def first_variation_identities(surface, y, samples=200, orde=64):
    """
    Controleer V·x = ½(1−u) op de rand, div_Σ V ≥ 0 en ∫_Σ div_Σ V = ∫_{∂Σ} V·x

    Args:
        surface (ParametrizedSurface): Oppervlak met rand op de bol
        y (ndarray): Punt buiten de gesloten bal
        samples (int): Aantal steekproeven per richting
        orde (int): Kwadratuurorde voor de integraalidentiteit

    Returns:
        dict: identity_residual, min_divergence, first_variation_gap

    Raises:
        ConformFout: Als |y| ≤ 1
    """
    y = np.asarray(y, dtype=float)
    if not np.linalg.norm(y) > 1.0:
        logger.logFout(f"Buitenpunt y met |y| = {np.linalg.norm(y):.6g} afgewezen")
        raise ConformFout("Punt y moet buiten de gesloten bal liggen", norm=float(np.linalg.norm(y)))
    if len(y) != surface.n:
        raise InvoerFout("Punt y heeft de verkeerde dimensie", verwacht=surface.n, kreeg=len(y))
    y2 = float(y @ y)

    def V(x):
        z = x - y
        return z / np.sum(z * z, axis=-1, keepdims=True)

    def divergentie(S, TH):
        x = surface.point(S, TH)
        z = x - y
        z2 = np.sum(z * z, axis=-1)
        z_normaal = surface.normal_projection(S, TH, z)
        z_raak2 = z2 - np.sum(z_normaal * z_normaal, axis=-1)
        return surface.k / z2 - 2 * z_raak2 / z2 ** 2

    # (i) algebraische identiteit op de rand
    theta = 2 * np.pi * np.arange(samples) / samples
    identiteit = 0.0
    for s_rand, _ in surface.boundary_rows:
        x = surface.point(np.full_like(theta, s_rand), theta)
        u = (y2 - 1.0) / np.sum((x - y) ** 2, axis=-1)
        identiteit = max(identiteit, float(np.max(np.abs(np.sum(V(x) * x, axis=-1) - 0.5 * (1 - u)))))

    # (ii) divergentie op een rooster zonder singuliere rijen
    a, b = surface.s_range
    s = a + (b - a) * np.arange(samples + 1) / samples
    for singulier in surface.singular_s:
        s = s[~np.isclose(s, singulier, atol=1e-14)]
    S, TH = np.meshgrid(s, theta, indexing="ij")
    min_divergentie = float(np.min(divergentie(S, TH)))

    # (iii) eerste variatie
    binnen = _oppervlakte_integraal(surface, divergentie, orde)
    rand = _randintegraal(surface, lambda x, snelheid: np.sum(V(x) * x, axis=-1) * snelheid, orde)
    resultaat = {
        "identity_residual": identiteit,
        "min_divergence": min_divergentie,
        "first_variation_gap": abs(binnen - rand),
        "interior_integral": binnen,
        "boundary_integral": rand,
    }
    logger.logActie(f"Eerste variatie {surface.name}: {resultaat}")
    return resultaat


def normal_square_integral(surface, v, orde=None):
    """∫_Σ |v^⊥|² dA met v^⊥ de normale component van v"""
    v = np.asarray(v, dtype=float)

    def integrand(S, TH):
        vv = np.broadcast_to(v, np.shape(S) + (len(v),))
        loodrecht = surface.normal_projection(S, TH, vv)
        return np.sum(loodrecht * loodrecht, axis=-1)

    return _oppervlakte_integraal(surface, integrand, orde, naam=f"∫|v⊥|² op {surface.name}")


def second_variation_formula(surface, v):
    """−(k−1)k ∫_Σ |v^⊥|² dA"""
    k = surface.k
    return -(k - 1) * k * normal_square_integral(surface, v)


def second_derivative_boundary_length(surface, v, steps=None, orde=256, stabiliteit=None):
    """
    d²/dt² |f_t(∂Σ)| bij t = 0 door centrale differenties met Richardson-extrapolatie

    Args:
        surface (ParametrizedSurface): Vrije-rand oppervlak
        v (ndarray): Eenheidsrichting van de flow
        steps (list): Stapgroottes (elk de helft van de vorige), standaard [Conform] stappen
        orde (int): Vaste kwadratuurorde zodat de ruis gelijk is over de stappen
        stabiliteit (float): Relatieve drempel voor de stabiliteit van de extrapolatie

    Returns:
        tuple: (finite_difference, formula)

    Raises:
        ConformFout: Als de geëxtrapoleerde waarden niet stabiliseren
    """
    steps = steps or instellingen.haalLijst("Conform", "stappen")
    stabiliteit = stabiliteit or instellingen.haalGetal("Conform", "stabiliteitsdrempel")
    if len(steps) < 3:
        raise InvoerFout("Minstens drie stapgroottes nodig", stappen=steps)
    v = np.asarray(v, dtype=float)

    def lengte(t):
        return image_boundary_length(surface, flow_map(v, t), orde=orde)

    basis = lengte(0.0)
    differenties = [(lengte(h) - 2 * basis + lengte(-h)) / h ** 2 for h in steps]
    extrapolaties = [(4 * differenties[i + 1] - differenties[i]) / 3 for i in range(len(steps) - 1)]
    sprong = abs(extrapolaties[-1] - extrapolaties[-2])
    if sprong > stabiliteit * max(1.0, abs(extrapolaties[-1])):
        logger.logFout(f"Stapverfijning stabiliseert niet: {extrapolaties}")
        raise ConformFout("Tweede differentie stabiliseert niet", oppervlak=surface.name,
                          extrapolaties=extrapolaties, stappen=list(steps))
    eindige_differentie = float(extrapolaties[-1])
    formule = second_variation_formula(surface, v)
    logger.logActie(f"Tweede variatie randlengte {surface.name}, v={np.round(v, 6).tolist()}: "
                    f"FD={eindige_differentie:.10f}, formule={formule:.10f}")
    return eindige_differentie, formule


def _normaal_gradient2(surface, v, S, TH, stap=1e-5):
    """|∇φ|²_g voor φ = v·N met centrale differenties van de analytische normaal"""
    def phi(s, th):
        return surface.unit_normal(s, th) @ v
    phi_s = (phi(S + stap, TH) - phi(S - stap, TH)) / (2 * stap)
    phi_t = (phi(S, TH + stap) - phi(S, TH - stap)) / (2 * stap)
    E, F, G = surface.metric(S, TH)
    det = E * G - F * F
    return (G * phi_s ** 2 - 2 * F * phi_s * phi_t + E * phi_t ** 2) / det


def index_form_normal_direction(surface, v):
    """
    Indexvorm Q(V) = ∫_Σ (|∇^⊥V|² − |A|²|V|²) − ∫_{∂Σ} |V|² voor V = v^⊥

    In codimensie 1 is V = φN met φ = v·N; de randterm komt van de tweede
    fundamentaalvorm van de eenheidsbol.

    Returns:
        tuple: (quadratic_form, formula) met formula = −2∫_Σ |v^⊥|²

    Raises:
        ConformFout: Als het oppervlak geen analytische normaal en |A|² heeft
    """
    if surface.unit_normal is None or surface.second_fundamental_norm2 is None:
        logger.logFout(f"Indexvorm gevraagd voor {surface.name} zonder analytische A")
        raise ConformFout("Analytische tweede fundamentaalvorm ontbreekt", oppervlak=surface.name)
    v = np.asarray(v, dtype=float)

    def binnen(S, TH):
        phi = surface.unit_normal(S, TH) @ v
        return _normaal_gradient2(surface, v, S, TH) - surface.second_fundamental_norm2(S, TH) * phi ** 2

    def rand(s, th):
        return (surface.unit_normal(s, th) @ v) ** 2

    inwendig = _oppervlakte_integraal(surface, binnen, naam=f"indexvorm op {surface.name}")
    randterm = 0.0
    for s_rand, _ in surface.boundary_rows:
        def f(theta, s_rand=s_rand):
            s = np.full_like(theta, s_rand)
            return rand(s, theta) * np.linalg.norm(surface.d_theta(s, theta), axis=-1)
        randterm += adaptive(lambda o: integrate_1d(f, 0.0, 2 * np.pi, o), naam="randterm indexvorm")
    randterm /= surface.multiplicity

    kwadratische_vorm = inwendig - randterm
    formule = -2.0 * normal_square_integral(surface, v)
    logger.logActie(f"Indexvorm {surface.name}, v={np.round(v, 6).tolist()}: Q={kwadratische_vorm:.10f}, "
                    f"formule={formule:.10f}")
    return kwadratische_vorm, formule


def length_deficit_profile(surface, v, ts=(0.2, 0.1, 0.05, 0.025)):
    """
    Tekort |∂Σ| − |f_t(∂Σ)| voor afnemende t, met het quotiënt tekort/t²

    Returns:
        list: dicts met t, deficit, ratio
    """
    v = np.asarray(v, dtype=float)
    basis = image_boundary_length(surface, BallConformalMap.identity(surface.n), orde=256)
    profiel = []
    for t in ts:
        tekort = basis - image_boundary_length(surface, flow_map(v, t), orde=256)
        profiel.append({"t": float(t), "deficit": float(tekort), "ratio": float(tekort / t ** 2)})
    return profiel


def random_flow_suite(surface, count=None, seed=7, t_bereik=(-1.0, 1.0), tolerantie=1e-6):
    """
    Willekeurige flows (v uniform op de bol, t uniform) met |f(∂Σ)| ≤ |∂Σ| + tolerantie

    Returns:
        list: VerificationRecord per steekproef
    """
    count = count or instellingen.haalGeheel("Conform", "steekproeven")
    rng = maak_rng(seed)
    basis = image_boundary_length(surface, BallConformalMap.identity(surface.n))
    records = []
    for i in range(count):
        v = random_unit_vector(rng, surface.n)
        t = float(rng.uniform(*t_bereik))
        beeld = image_boundary_length(surface, flow_map(v, t))
        records.append(VerificationRecord(
            theorem_id="randlengte_neemt_af",
            surface=surface.name,
            parameters={"steekproef": i, "v": v.tolist(), "t": t},
            lhs=beeld,
            rhs=basis,
            residual=max(0.0, beeld - basis),
            passed=beeld <= basis + tolerantie,
        ))
    geslaagd = sum(r.passed for r in records)
    logger.logActie(f"Flowsuite {surface.name}: {geslaagd}/{count} randlengtecontroles geslaagd (seed {seed})")
    return records
