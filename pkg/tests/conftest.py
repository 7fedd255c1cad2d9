"""
Gedeelde fixtures voor de Steklab tests
"""
import os
import sys
import tempfile

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, ROOT)

# Logbestanden van de tests niet tussen die van echte runs zetten
os.environ.setdefault("STEKLAB_LOGMAP", os.path.join(tempfile.gettempdir(), "steklab_testlogs"))

import numpy as np
import pytest

from modules.mesh import DomainKind, DomainSpec, generate_domain
from modules.minsurf import CriticalKind, solve_critical_parameter
from modules.rapport_handler import rapportHandler


@pytest.fixture(scope="session")
def T0():
    return solve_critical_parameter(CriticalKind.CATENOID)


@pytest.fixture(scope="session")
def schijf():
    return generate_domain(DomainSpec(DomainKind.DISK, resolution=8))


@pytest.fixture(scope="session")
def fijne_schijf():
    return generate_domain(DomainSpec(DomainKind.DISK, resolution=16))


@pytest.fixture(scope="session")
def annulus():
    return generate_domain(DomainSpec(DomainKind.ANNULUS, modulus=1.0, resolution=8))


@pytest.fixture(scope="session")
def brede_annulus():
    """Annulus met T = 1.5: σ₁ = 1/T is enkelvoudig"""
    return generate_domain(DomainSpec(DomainKind.ANNULUS, modulus=1.5, resolution=4))


@pytest.fixture(scope="session")
def mobius():
    return generate_domain(DomainSpec(DomainKind.MOBIUS, modulus=1.0, resolution=8))


@pytest.fixture
def rng():
    return np.random.default_rng(7)


@pytest.fixture
def rapport(tmp_path):
    """Actieve rapportHandler in een tijdelijke uitvoermap"""
    assert rapportHandler.begin(str(tmp_path))
    yield rapportHandler
    rapportHandler.uitvoermap = None
