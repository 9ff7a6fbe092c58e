import pytest

from virtcover import parse

T3 = "O1+ U2+ O3+ U1+ O2+ U3+"
VT = "O1+ O2+ U1+ U2+"
VTX = "O1+ O2+ V1 # U1+ U2+ V1 #"
VHL = "O1+ V1\nU1+ V1"
EL2 = "O1+ O2+\nU1+ U2+"
HOPF = "O1+ U2+\nU1+ O2+"


@pytest.fixture
def t3():
    return parse(T3)


@pytest.fixture
def vt():
    return parse(VT)


@pytest.fixture
def vtx():
    return parse(VTX)


def pytest_terminal_summary(terminalreporter):
    from .test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for key in sorted(RESULTS, key=int):
            terminalreporter.write_line(RESULTS[key])
