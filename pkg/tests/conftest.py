import pytest

from klcells import g2_affine


@pytest.fixture(scope="session")
def W():
    """One shared group instance; its memo tables persist across the run."""
    return g2_affine()
