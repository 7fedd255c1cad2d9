"""
Conforme transformaties van de eenheidsbal

Elke afbeelding heeft de vorm f(x) = a ⊕ (Qx) met Möbius-optelling
a ⊕ x = ((1+2⟨a,x⟩+|x|²)a + (1−|a|²)x) / (1+2⟨a,x⟩+|a|²|x|²).
Op de bol is de vergrotingsfactor (|y|²−1)/|x−y|² met y = −a/|a|².
"""
from dataclasses import dataclass

import numpy as np

from modules.fouten import ConformFout, InvoerFout
from modules.logger import logger


def mobius_add(a, x):
    """
    Möbius-optelling a ⊕ x, gevectoriseerd over de laatste as

    Args:
        a (ndarray): (n,) of (..., n)
        x (ndarray): (..., n)
    """
    a = np.asarray(a, dtype=float)
    x = np.asarray(x, dtype=float)
    ax = np.sum(a * x, axis=-1, keepdims=True)
    a2 = np.sum(a * a, axis=-1, keepdims=True)
    x2 = np.sum(x * x, axis=-1, keepdims=True)
    teller = (1 + 2 * ax + x2) * a + (1 - a2) * x
    noemer = 1 + 2 * ax + a2 * x2
    return teller / noemer


@dataclass(frozen=True, eq=False)
class BallConformalMap:
    """
    Conforme transformatie f(x) = a ⊕ (Qx) van Bⁿ

    Attributes:
        center (ndarray): a met |a| < 1 (beeld van de oorsprong)
        rotation (ndarray): orthogonale n×n matrix Q
    """
    center: np.ndarray
    rotation: np.ndarray

    def __post_init__(self):
        a = np.array(self.center, dtype=float).reshape(-1)
        Q = np.array(self.rotation, dtype=float)
        if Q.shape != (len(a), len(a)):
            raise ConformFout("Rotatie past niet bij de dimensie", n=len(a), vorm=Q.shape)
        if not np.linalg.norm(a) < 1.0:
            raise ConformFout("Centrum moet binnen de bal liggen", norm=float(np.linalg.norm(a)))
        afwijking = float(np.max(np.abs(Q.T @ Q - np.eye(len(a)))))
        if afwijking > 1e-9:
            raise ConformFout("Rotatie is niet orthogonaal", afwijking=afwijking)
        a.setflags(write=False)
        Q.setflags(write=False)
        object.__setattr__(self, "center", a)
        object.__setattr__(self, "rotation", Q)

    @classmethod
    def identity(cls, n):
        return cls(np.zeros(n), np.eye(n))

    @property
    def n(self):
        return len(self.center)

    @property
    def exterior_point(self):
        """y = −a/|a|², None voor een rotatie"""
        a2 = float(self.center @ self.center)
        if a2 == 0.0:
            return None
        return -self.center / a2

    def __call__(self, x):
        return mobius_add(self.center, np.asarray(x, dtype=float) @ self.rotation.T)


def _controleer_punten(f, x, marge=1e-12):
    x = np.asarray(x, dtype=float)
    if x.shape[-1] != f.n:
        raise InvoerFout("Punt heeft de verkeerde dimensie", verwacht=f.n, kreeg=x.shape[-1])
    normen = np.linalg.norm(x, axis=-1)
    if np.any(normen > 1.0 + marge):
        logger.logFout(f"Punt buiten de bal aangeboden (|x| = {float(np.max(normen)):.6g})")
        raise ConformFout("Punt ligt buiten de gesloten eenheidsbal", norm=float(np.max(normen)))
    return x


def apply_map(f, x):
    """
    Pas f toe op punten in de gesloten bal

    Raises:
        ConformFout: Als |x| > 1 + 1e-12
    """
    return f(_controleer_punten(f, x))


def magnification(f, x):
    """Conforme factor u(x) = (1−|a|²)/(1+2⟨a,Qx⟩+|a|²|x|²), zodat f*δ = u²δ"""
    x = np.asarray(x, dtype=float)
    a = f.center
    qx = x @ f.rotation.T
    a2 = float(a @ a)
    return (1 - a2) / (1 + 2 * (qx @ a) + a2 * np.sum(x * x, axis=-1))


def magnification_from_exterior(f, x):
    """(|y|²−1)/|x−y|² met y = −a/|a|²; alleen geldig voor x op de bol en Q = I"""
    y = f.exterior_point
    if y is None:
        return np.ones(np.shape(x)[:-1])
    return (float(y @ y) - 1.0) / np.sum((np.asarray(x) - y) ** 2, axis=-1)


def compose(f, g):
    """
    f∘g als BallConformalMap

    Het centrum is f(g(0)); de rotatie volgt uit (−a)⊕(f∘g)(e_i).
    """
    if f.n != g.n:
        raise InvoerFout("Afbeeldingen hebben verschillende dimensies", f=f.n, g=g.n)
    centrum = f(g(np.zeros(f.n)))
    beelden = f(g(np.eye(f.n)))
    Q = mobius_add(-centrum, beelden).T
    # polaire ontbinding verwijdert afrondingsruis uit de orthogonaliteit
    U, _, Vt = np.linalg.svd(Q)
    return BallConformalMap(centrum, U @ Vt)


def inverse(f):
    """f⁻¹(y) = Qᵀ((−a) ⊕ y)"""
    Qt = f.rotation.T
    return BallConformalMap(-(Qt @ f.center), Qt)


def conformality_residual(f, x, stap=1e-6):
    """
    Certificaat van conformiteit via een centrale-differentie Jacobiaan

    Returns:
        dict: jacobian_residual = max ‖JᵀJ − u²I‖, magnification_error = max relatieve
              afwijking van de singuliere waarden van J ten opzichte van u
    """
    x = np.atleast_2d(_controleer_punten(f, x))
    n = f.n
    jac_residu, vergroting_fout = 0.0, 0.0
    for punt in x:
        J = np.empty((n, n))
        for i in range(n):
            e = np.zeros(n)
            e[i] = stap
            J[:, i] = (f(punt + e) - f(punt - e)) / (2 * stap)
        u = float(magnification(f, punt))
        jac_residu = max(jac_residu, float(np.max(np.abs(J.T @ J - u * u * np.eye(n)))))
        singulier = np.linalg.svd(J, compute_uv=False)
        vergroting_fout = max(vergroting_fout, float(np.max(np.abs(singulier - u)) / u))
    return {"jacobian_residual": jac_residu, "magnification_error": vergroting_fout}


@dataclass(frozen=True, eq=False)
class ConformalFlow:
    """
    Eenparametergroep f_t met generator X(x) = ((1+|x|²)/2)·v − ⟨x,v⟩x
    """
    direction: np.ndarray

    def __post_init__(self):
        v = np.array(self.direction, dtype=float).reshape(-1)
        if abs(np.linalg.norm(v) - 1.0) > 1e-12:
            raise InvoerFout("Richting v moet een eenheidsvector zijn", norm=float(np.linalg.norm(v)))
        v.setflags(write=False)
        object.__setattr__(self, "direction", v)

    def at(self, t):
        return flow_map(self.direction, t)

    def generator(self, x):
        x = np.asarray(x, dtype=float)
        v = self.direction
        return 0.5 * (1 + np.sum(x * x, axis=-1, keepdims=True)) * v - (x @ v)[..., None] * x


def flow_map(v, t):
    """
    f_t met centrum a(t) = tanh(t/2)·v en identiteitsrotatie

    Args:
        v (ndarray): Eenheidsrichting
        t (float): Flowparameter
    """
    v = np.asarray(v, dtype=float)
    if abs(np.linalg.norm(v) - 1.0) > 1e-12:
        raise InvoerFout("Richting v moet een eenheidsvector zijn", norm=float(np.linalg.norm(v)))
    return BallConformalMap(np.tanh(0.5 * t) * v, np.eye(len(v)))


def random_unit_vector(rng, n):
    v = rng.standard_normal(n)
    return v / np.linalg.norm(v)


def random_rotation(rng, n):
    """Haar-verdeelde orthogonale matrix via QR met tekencorrectie"""
    Q, R = np.linalg.qr(rng.standard_normal((n, n)))
    return Q * np.sign(np.diag(R))


def random_ball_map(rng, n, radius=0.5):
    """Willekeurige afbeelding met |a| = radius en willekeurige rotatie"""
    return BallConformalMap(radius * random_unit_vector(rng, n), random_rotation(rng, n))
