"""
Contains fixture functions for the tests.
"""


import pytest
from dotenv import load_dotenv, find_dotenv
import algext
from algext.corpus import load_entry
from algext.finite_field import make_field

load_dotenv(find_dotenv())


@pytest.fixture(scope='module')
def f7():
    """The prime field with 7 elements.
    """
    return make_field(7)


@pytest.fixture(scope='module')
def f101():
    """The prime field with 101 elements.
    """
    return make_field(101)


@pytest.fixture(scope='module')
def f4():
    """F_4 = F_2[X] / (X^2 + X + 1).
    """
    return make_field(2, 2)


@pytest.fixture(scope='module')
def f9():
    """F_9 with the default modulus.
    """
    return make_field(3, 2)


@pytest.fixture(scope='module')
def parabola():
    """The parabola corpus entry.
    """
    return load_entry("parabola")


@pytest.fixture(scope='module')
def circle():
    """The circle corpus entry (no parametrization).
    """
    return load_entry("circle")


@pytest.fixture
def harness(tmp_path):
    """Creates a harness writing its reports into a temporary directory.
    """
    return algext.Harness(output_dir=str(tmp_path / "reports"))


@pytest.fixture
def write_config(tmp_path):
    """Writes an experiment file and returns its path.
    """
    def writer(name, text):
        path = tmp_path / f"{name}.ini"
        path.write_text(text, encoding="utf-8")
        return str(path)
    return writer
