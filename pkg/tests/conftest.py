import pytest

from sdcma.config import ScenarioConfig
from sdcma.baselines import SchemeKind


@pytest.fixture
def two_group_qpsk():
    return ScenarioConfig(
        name="2xqpsk",
        schemes=(SchemeKind.PD_SDCMA,),
        constellations=("qpsk",),
        ratios=(16.0, 1.0),
        sweep_unit="snr",
        symbols_per_point=200,
    )


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
