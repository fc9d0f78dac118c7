"""Shared fixtures: session-scoped bases at the sizes the suite reuses."""

import pytest

from sixbeam.eigenbasis import build_basis


@pytest.fixture(scope="session")
def basis30():
    return build_basis(30)


@pytest.fixture(scope="session")
def basis60():
    return build_basis(60)


@pytest.fixture(scope="session")
def basis100():
    return build_basis(100)
