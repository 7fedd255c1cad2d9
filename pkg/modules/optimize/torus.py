"""
Exacte eerste Laplace-eigenwaarde van vlakke tori ℝ²/Λ

λ₁ = 4π²|ξ*|² met ξ* de kortste niet-nul vector van het duale rooster Λ*.
De genormaliseerde grootheid λ₁·A is schaalinvariant.
"""
import itertools
import math
from dataclasses import dataclass

import numpy as np
import pandas as pd

from modules.fouten import InvoerFout, OptimalisatieFout
from modules.logger import logger

HERMITE_2 = 2.0 / math.sqrt(3.0)
GELIJK_RELATIEF = 1e-12


@dataclass(frozen=True, eq=False)
class Lattice:
    """
    Rooster opgespannen door a en b met positieve oriëntatie

    Attributes:
        a (ndarray): Eerste basisvector
        b (ndarray): Tweede basisvector
    """
    a: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        a = np.array(self.a, dtype=float).reshape(2)
        b = np.array(self.b, dtype=float).reshape(2)
        det = a[0] * b[1] - a[1] * b[0]
        schaal = np.linalg.norm(a) * np.linalg.norm(b)
        if not schaal > 0 or abs(det) <= 1e-14 * schaal:
            raise InvoerFout("Basisvectoren zijn lineair afhankelijk", a=a.tolist(), b=b.tolist())
        if det < 0:
            raise InvoerFout("Basis moet positief georiënteerd zijn", a=a.tolist(), b=b.tolist())
        a.setflags(write=False)
        b.setflags(write=False)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @classmethod
    def square(cls):
        return cls((1.0, 0.0), (0.0, 1.0))

    @classmethod
    def rhombic(cls, angle_degrees=60.0):
        hoek = math.radians(angle_degrees)
        return cls((1.0, 0.0), (math.cos(hoek), math.sin(hoek)))

    @classmethod
    def from_shape(cls, x, y):
        """Rooster met a = (1, 0) en b = (x, y), y > 0"""
        return cls((1.0, 0.0), (x, y))

    @property
    def basis(self):
        return np.column_stack([self.a, self.b])

    @property
    def area(self):
        return float(abs(np.linalg.det(self.basis)))

    @property
    def dual_basis(self):
        """Kolommen a*, b* met ⟨a*, a⟩ = 1, ⟨a*, b⟩ = 0, ..."""
        return np.linalg.inv(self.basis).T

    def scaled(self, factor):
        return Lattice(factor * self.a, factor * self.b)


def _gauss_reductie(u, v):
    """Lagrange–Gauss-reductie van een 2D-basis: |u| ≤ |v| en |⟨u,v⟩| ≤ |u|²/2"""
    if u @ u > v @ v:
        u, v = v, u
    for _ in range(10000):
        x = round(float(u @ v) / float(u @ u))
        v = v - x * u
        if u @ u <= v @ v:
            return u, v
        u, v = v, u
    raise OptimalisatieFout("Gauss-reductie convergeert niet", u=u.tolist(), v=v.tolist())


def shortest_dual_vectors(lattice):
    """
    Alle kortste niet-nul duale vectoren

    De opsomming gebruikt de gereduceerde duale basis en straal 4·√(γ₂·det Λ*),
    met γ₂ = 2/√3 de Hermite-constante, ruim boven de eerste Minkowski-grens.

    Returns:
        tuple: (lengte, array met de kortste vectoren, ± paren beide)
    """
    dual = lattice.dual_basis
    u, v = _gauss_reductie(dual[:, 0], dual[:, 1])
    straal = 4.0 * math.sqrt(HERMITE_2 / lattice.area)
    B = np.column_stack([u, v])
    gram_inv = np.linalg.inv(B.T @ B)
    grenzen = [int(math.ceil(straal * math.sqrt(gram_inv[i, i]))) for i in range(2)]
    coefficienten = np.array([c for c in itertools.product(range(-grenzen[0], grenzen[0] + 1),
                                                           range(-grenzen[1], grenzen[1] + 1)) if c != (0, 0)])
    vectoren = coefficienten @ B.T
    normen = np.linalg.norm(vectoren, axis=1)
    kortste = float(normen.min())
    return kortste, vectoren[normen <= kortste * (1 + GELIJK_RELATIEF)]


def flat_torus_lambda1(lattice):
    """
    λ₁·A = 4π²|ξ*|²·|det|

    Args:
        lattice (Lattice): Rooster

    Returns:
        float: Genormaliseerde eerste eigenwaarde
    """
    kortste, _ = shortest_dual_vectors(lattice)
    return 4.0 * math.pi ** 2 * kortste ** 2 * lattice.area


def lambda1_multiplicity(lattice):
    """Multipliciteit van λ₁ (aantal kortste duale vectoren, ± apart geteld)"""
    return len(shortest_dual_vectors(lattice)[1])


@dataclass(frozen=True)
class TorusDerivative:
    """
    Attributes:
        q_form (float): Q_h van de gesloten vlakke torus op de vlakke golf
        analytic (float): Exacte afgeleide −4π²·ξ*ᵀhξ* van λ₁ langs δ + t·h
        relative_error (float): |q_form − analytic| / max(1, |analytic|)
    """
    q_form: float
    analytic: float
    relative_error: float


def laplace_derivative_flat_torus(lattice, h):
    """
    Q_h(u) = −∫⟨τ(u) + (λ₁/2)u²g, h⟩ da op u = √(2/A)·cos 2π⟨ξ*, x⟩

    De integralen worden met de trapeziumregel over het fundamentele
    parallellogram berekend; voor trigonometrische polynomen is die exact.

    Args:
        lattice (Lattice): Rooster met enkelvoudige λ₁
        h (ndarray): Constante symmetrische 2×2 tensor

    Returns:
        TorusDerivative: Q_h, de analytische afgeleide en het relatieve verschil

    Raises:
        InvoerFout: Als h geen symmetrische 2×2 matrix is
        OptimalisatieFout: Als λ₁ meervoudig is
    """
    h = np.asarray(h, dtype=float)
    if h.shape != (2, 2) or abs(h[0, 1] - h[1, 0]) > 1e-14 * max(1.0, float(np.max(np.abs(h)))):
        raise InvoerFout("h moet een symmetrische 2×2 matrix zijn", h=h.tolist())
    _, vectoren = shortest_dual_vectors(lattice)
    if len(vectoren) > 2:
        logger.logFout(f"λ₁ heeft multipliciteit {len(vectoren)}; Q_h is niet gedefinieerd")
        raise OptimalisatieFout("λ₁ is meervoudig; gebruik de clusterbehandeling",
                                multipliciteit=len(vectoren))
    xi = vectoren[0]
    lam = 4.0 * math.pi ** 2 * float(xi @ xi)
    A = lattice.area

    # ξ = B⁻ᵀm met m geheel, dus ⟨ξ, Bs⟩ = ⟨m, s⟩
    B = lattice.basis
    m = np.rint(B.T @ xi)
    n = int(4 * np.max(np.abs(m)) + 4)
    s = np.arange(n) / n
    S1, S2 = np.meshgrid(s, s, indexing="ij")
    fase = 2 * math.pi * (m[0] * S1 + m[1] * S2)
    u = math.sqrt(2.0 / A) * np.cos(fase)
    du = -math.sqrt(2.0 / A) * 2 * math.pi * np.sin(fase)[..., None] * xi
    da = A / n ** 2
    g = np.eye(2)
    buiten = np.einsum("ija,ijb->ab", du, du) * da
    energie = float(np.sum(du * du)) * da
    massa = float(np.sum(u * u)) * da
    tau = buiten - 0.5 * energie * g
    q = -float(np.sum((tau + 0.5 * lam * massa * g) * h))
    exact = -4.0 * math.pi ** 2 * float(xi @ h @ xi)
    fout = abs(q - exact) / max(1.0, abs(exact))
    logger.logActie(f"Torus Q_h = {q:.12g}, analytisch {exact:.12g} (relatief {fout:.2e})")
    return TorusDerivative(q_form=q, analytic=exact, relative_error=fout)


def scan_flat_tori(x_values, y_values):
    """
    λ₁A over rooster­vormen a = (1, 0), b = (x, y)

    Returns:
        DataFrame: kolommen x, y, lambda1A, multiplicity
    """
    rijen = []
    for x in x_values:
        for y in y_values:
            rooster = Lattice.from_shape(float(x), float(y))
            rijen.append({"x": float(x), "y": float(y), "lambda1A": flat_torus_lambda1(rooster),
                          "multiplicity": lambda1_multiplicity(rooster)})
    frame = pd.DataFrame(rijen)
    if len(frame):
        beste = frame.loc[frame["lambda1A"].idxmax()]
        logger.logActie(f"Torusscan: {len(frame)} vormen, maximum λ₁A = {beste['lambda1A']:.10f} "
                        f"bij ({beste['x']:.4f}, {beste['y']:.4f})")
    return frame
