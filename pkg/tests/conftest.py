import pytest

from conductor_workbench.fields import PrimeField, RationalFunctionField
from conductor_workbench.series import BaseDVR
from conductor_workbench.worked_examples import (generated_extension_pool,
                                                 quartic_counterexample)


@pytest.fixture(scope="session")
def f2t_base():
    return BaseDVR(RationalFunctionField(2), 32)


@pytest.fixture(scope="session")
def f2_base():
    return BaseDVR(PrimeField(2), 16)


@pytest.fixture(scope="session")
def f3_base():
    return BaseDVR(PrimeField(3), 16)


@pytest.fixture(scope="session")
def counterexample():
    return quartic_counterexample()


@pytest.fixture(scope="session")
def extension_pool():
    return generated_extension_pool()
