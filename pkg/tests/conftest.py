"""Shared fixtures: the known-good certificates and small search spaces."""

import pytest

from fillperm import FillingInstance, Permutation
from fillperm.certificates import GENUS2_BASE, SPHERE_FOUR_BASE, TORUS_BASE


@pytest.fixture(scope="session")
def genus2_sigma() -> Permutation:
    return Permutation.parse(GENUS2_BASE)


@pytest.fixture(scope="session")
def genus2_instance(genus2_sigma) -> FillingInstance:
    return FillingInstance(genus2_sigma, genus=2, punctures=3)


@pytest.fixture(scope="session")
def torus_sigma() -> Permutation:
    return Permutation.parse(TORUS_BASE)


@pytest.fixture(scope="session")
def sphere4_sigma() -> Permutation:
    return Permutation.parse(SPHERE_FOUR_BASE)


def small_parameter_grid() -> list[tuple[int, int, int]]:
    """Every (genus, punctures, n) with 4n <= 8, punctures up to one past
    the face count so the infeasible edge is exercised too."""
    grid = []
    for n in (1, 2):
        for genus in range(0, 3):
            faces = n + 2 - 2 * genus
            if faces < 0:
                continue
            for punctures in range(0, max(faces, 0) + 2):
                grid.append((genus, punctures, n))
    return grid
