import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from yangianpp import Params


@pytest.fixture
def params():
    """A fixed generic specialization used by most frozen-value tests."""
    return Params.make(Fraction(101, 13), Fraction(47, 7), Fraction(7))


@pytest.fixture
def params_fp():
    return Params.make(Fraction(101, 13), Fraction(47, 7), Fraction(7), mode="prime-field")
