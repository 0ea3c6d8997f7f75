"""Shared helpers for the test suite."""

import json
import pathlib

import pytest

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


def load_fixture(name):
    """Load a frozen diagram fixture by basename (without extension)."""
    return json.loads((FIXTURES / f"{name}.json").read_text())


@pytest.fixture(scope="session")
def load():
    return load_fixture


@pytest.fixture(scope="session")
def figure_regular_n8():
    return load_fixture("figure_regular_n8")


@pytest.fixture(scope="session")
def figure_singular_n8_k7():
    return load_fixture("figure_singular_n8_k7")


@pytest.fixture(scope="session")
def figure_singular_n14_k7():
    return load_fixture("figure_singular_n14_k7")


@pytest.fixture(scope="session")
def figure_singular_n8_k1():
    return load_fixture("figure_singular_n8_k1")


@pytest.fixture(scope="session")
def figure_singular_n8_k0():
    return load_fixture("figure_singular_n8_k0")
