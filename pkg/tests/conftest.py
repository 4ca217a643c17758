import pytest

from oracles import ToddCoxeterBand


@pytest.fixture(scope="session")
def tc_abx():
    """Coset-enumerated free band on {a, b, x}; about 20 s, built once."""
    return ToddCoxeterBand("abx", 8)


@pytest.fixture(scope="session")
def tc_ab():
    return ToddCoxeterBand("ab", 3)



def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
