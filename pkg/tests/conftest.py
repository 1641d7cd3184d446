import random

import pytest

from mihailova import _pykernels
from mihailova.fiber import mihailova_generators
from mihailova.oracles import free_oracle, s3_oracle, zsq_oracle

try:
    from mihailova import _ckernels
except ImportError:  # extension not built
    _ckernels = None

KERNEL_MODULES = [_pykernels] + ([_ckernels] if _ckernels is not None else [])

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(params=KERNEL_MODULES, ids=lambda m: m.BACKEND)
def kmod(request):
    return request.param


@pytest.fixture
def rng():
    return random.Random(20071)


@pytest.fixture(scope="session")
def s3():
    return s3_oracle()


@pytest.fixture(scope="session")
def zsq():
    return zsq_oracle()


@pytest.fixture(scope="session")
def free():
    return free_oracle()


@pytest.fixture(scope="session")
def s3_gens(s3):
    return mihailova_generators(s3.presentation)


@pytest.fixture
def acceptance_log():
    return _ACCEPTANCE_LINES.append


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
