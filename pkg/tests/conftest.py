from typing import Dict

import pytest

from PyCayley_Cohomology._instances import InstanceFile, shipped_fixtures
from PyCayley_Cohomology._simplicial import SimplicialComplex, octahedron, seven_vertex_torus


@pytest.fixture(scope="session")
def fixtures() -> Dict[str, InstanceFile]:
    return {inst.name: inst for inst in shipped_fixtures()}


@pytest.fixture(scope="session")
def sphere() -> SimplicialComplex:
    return octahedron()


@pytest.fixture(scope="session")
def torus() -> SimplicialComplex:
    return seven_vertex_torus()


@pytest.fixture
def cover(fixtures):
    def get(name: str):
        return fixtures[name].cover()

    return get
