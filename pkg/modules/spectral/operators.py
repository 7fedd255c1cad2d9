"""
Assemblage van de discrete operatoren voor het Steklov-probleem

Stijfheid: stuksgewijs lineaire Galerkin-vorm van ∫|∇u|²_g da.
Randmassa: trapeziumregel (gelumpt) van ∫u² ρ ds langs de randzijden.
DtN: Schur-complement van de stijfheid op de randvrijheidsgraden.
"""
from dataclasses import dataclass
from functools import cached_property

import numpy as np
import scipy.sparse as sp
from scipy.sparse.linalg import splu

from modules.fouten import SpectraalFout, InvoerFout
from modules.logger import logger


@dataclass(frozen=True, eq=False)
class DiscreteMetric:
    """
    Metriek per driehoek plus randdichtheid

    Attributes:
        tensors (ndarray): (F, 2, 2) symmetrisch positief-definiete tensoren in kaartcoördinaten
        boundary_density (ndarray): positief gewicht per randvrijheidsgraad (volgorde mesh.boundary_dofs)
    """
    tensors: np.ndarray
    boundary_density: np.ndarray

    def __post_init__(self):
        tensors = np.array(self.tensors, dtype=float)
        dichtheid = np.array(self.boundary_density, dtype=float)
        tensors.setflags(write=False)
        dichtheid.setflags(write=False)
        object.__setattr__(self, "tensors", tensors)
        object.__setattr__(self, "boundary_density", dichtheid)

    @classmethod
    def euclidean(cls, mesh, density=None):
        """Vlakke kaartmetriek met (optionele) randdichtheid, standaard uniform 1"""
        tensors = np.broadcast_to(np.eye(2), (len(mesh.triangles), 2, 2))
        if density is None:
            density = np.ones(len(mesh.boundary_dofs))
        return cls(tensors, density)

    @classmethod
    def conformal(cls, mesh, factor, density=None):
        """Conforme metriek e^{2w}·δ met factor e^{2w} per driehoek"""
        factor = np.asarray(factor, dtype=float).reshape(-1, 1, 1)
        tensors = factor * np.eye(2)
        if density is None:
            density = np.ones(len(mesh.boundary_dofs))
        return cls(tensors, density)

    def with_density(self, density):
        return DiscreteMetric(self.tensors, density)

    def scaled(self, interior=1.0, boundary=1.0):
        """Schaal de inwendige tensoren en/of de randdichtheid met positieve constanten"""
        return DiscreteMetric(self.tensors * interior, self.boundary_density * boundary)

    def validate(self, mesh):
        """
        Controleer dimensies en positiviteit

        Raises:
            InvoerFout: Bij verkeerde dimensies of niet-positieve dichtheid
            SpectraalFout: Als een tensor niet SPD is (met de driehoek in de context)
        """
        if self.tensors.shape != (len(mesh.triangles), 2, 2):
            raise InvoerFout("Metriek past niet bij het net", tensors=self.tensors.shape,
                             driehoeken=len(mesh.triangles))
        if self.boundary_density.shape != (len(mesh.boundary_dofs),):
            raise InvoerFout("Randdichtheid past niet bij het net", dichtheid=self.boundary_density.shape,
                             randpunten=len(mesh.boundary_dofs))
        if not np.all(self.boundary_density > 0):
            slecht = int(np.argmin(self.boundary_density))
            raise InvoerFout("Randdichtheid moet overal positief zijn", randpunt=slecht,
                             waarde=float(self.boundary_density[slecht]))
        g = self.tensors
        asymmetrie = np.abs(g[:, 0, 1] - g[:, 1, 0])
        spoor = g[:, 0, 0] + g[:, 1, 1]
        det = g[:, 0, 0] * g[:, 1, 1] - g[:, 0, 1] * g[:, 1, 0]
        slecht = np.flatnonzero((asymmetrie > 1e-12 * np.maximum(1.0, spoor)) | (det <= 0) | (spoor <= 0))
        if slecht.size:
            raise SpectraalFout("Metriektensor is niet symmetrisch positief-definiet",
                                driehoek=int(slecht[0]), tensor=g[slecht[0]].tolist())


@dataclass(frozen=True, eq=False)
class OperatorSet:
    """
    Discrete operatoren op de vrijheidsgraden van een net

    Attributes:
        stiffness (csr_matrix): stijfheid (n_dof × n_dof), rijsommen 0
        boundary_mass (csr_matrix): diagonale randmassa, nul buiten de rand
        boundary_dofs (ndarray): randvrijheidsgraden
        interior_dofs (ndarray): inwendige vrijheidsgraden
    """
    stiffness: sp.csr_matrix
    boundary_mass: sp.csr_matrix
    boundary_dofs: np.ndarray
    interior_dofs: np.ndarray

    @property
    def boundary_weights(self):
        """Diagonaal van de randmassa in randvolgorde"""
        return self.boundary_mass.diagonal()[self.boundary_dofs]

    @property
    def boundary_length(self):
        return float(self.boundary_weights.sum())

    @cached_property
    def _schur(self):
        S = self.stiffness.tocsr()
        b, i = self.boundary_dofs, self.interior_dofs
        S_bb = S[b][:, b].toarray()
        if len(i) == 0:
            return 0.5 * (S_bb + S_bb.T), np.zeros((0, len(b)))
        S_ii = S[i][:, i].tocsc()
        S_ib = S[i][:, b].toarray()
        try:
            lu = splu(S_ii)
            uitbreiding = lu.solve(S_ib)
        except RuntimeError as e:
            raise SpectraalFout("Inwendig blok van de stijfheid is singulier "
                                "(losse inwendige component?)", inwendig=len(i), fout=str(e)) from e
        if not np.all(np.isfinite(uitbreiding)):
            raise SpectraalFout("Inwendig blok van de stijfheid is singulier", inwendig=len(i))
        D = S_bb - S_ib.T @ uitbreiding
        return 0.5 * (D + D.T), uitbreiding

    @property
    def dtn(self):
        return self._schur[0]


def _element_stiffness(mesh, metric):
    """
    Lokale stijfheidsmatrices area·√det g·Gᵀ g⁻¹ G

    Returns:
        ndarray: (F, 3, 3)
    """
    g = metric.tensors
    det = g[:, 0, 0] * g[:, 1, 1] - g[:, 0, 1] * g[:, 1, 0]
    inv = np.empty_like(g)
    inv[:, 0, 0] = g[:, 1, 1] / det
    inv[:, 1, 1] = g[:, 0, 0] / det
    inv[:, 0, 1] = -g[:, 0, 1] / det
    inv[:, 1, 0] = -g[:, 1, 0] / det
    G = mesh.basis_gradients
    gewicht = mesh.signed_areas * np.sqrt(det)
    return gewicht[:, None, None] * np.einsum("fai,fab,fbj->fij", G, inv, G)


def assemble_operators(mesh, metric):
    """
    Assembleer stijfheid en randmassa

    Args:
        mesh (TriangleMesh): Geldig net
        metric (DiscreteMetric): Metriek op dat net

    Returns:
        OperatorSet: De operatoren (DtN wordt lui berekend)
    """
    metric.validate(mesh)
    n = mesh.n_dof
    lokaal = _element_stiffness(mesh, metric)
    dofs = mesh.triangle_dofs
    rijen = np.repeat(dofs, 3, axis=1).ravel()
    kolommen = np.tile(dofs, (1, 3)).ravel()
    stijfheid = sp.coo_matrix((lokaal.ravel(), (rijen, kolommen)), shape=(n, n)).tocsr()
    stijfheid = 0.5 * (stijfheid + stijfheid.T)

    diagonaal = np.zeros(n)
    diagonaal[mesh.boundary_dofs] = mesh.boundary_vertex_weights * metric.boundary_density
    randmassa = sp.diags(diagonaal).tocsr()

    logger.logActie(f"Operatoren geassembleerd: {n} vrijheidsgraden, "
                    f"{len(mesh.boundary_dofs)} op de rand")
    return OperatorSet(
        stiffness=stijfheid,
        boundary_mass=randmassa,
        boundary_dofs=mesh.boundary_dofs,
        interior_dofs=mesh.interior_dofs,
    )


def dtn_matrix(ops):
    """
    Dirichlet-naar-Neumann matrix S_bb − S_bi S_ii⁻¹ S_ib

    Raises:
        SpectraalFout: Als het inwendige blok singulier is
    """
    return ops.dtn


def harmonic_extension(ops, boundary_values):
    """
    Discreet harmonische uitbreiding van randwaarden naar alle vrijheidsgraden

    Args:
        ops (OperatorSet): Operatoren
        boundary_values (ndarray): (n_b,) of (n_b, m) randwaarden

    Returns:
        ndarray: (n_dof,) of (n_dof, m)
    """
    randwaarden = np.asarray(boundary_values, dtype=float)
    _, uitbreiding = ops._schur
    n = ops.stiffness.shape[0]
    volledig = np.zeros((n,) + randwaarden.shape[1:])
    volledig[ops.boundary_dofs] = randwaarden
    volledig[ops.interior_dofs] = -(uitbreiding @ randwaarden)
    return volledig
