import numpy as np
import pytest
from hypothesis import settings

settings.register_profile("lct", max_examples=40, deadline=None)
settings.load_profile("lct")


@pytest.fixture
def rng():
    return np.random.default_rng(12345)



def pytest_terminal_summary(terminalreporter):
    lines = [value for key in ("passed", "failed") for rep in terminalreporter.stats.get(key, [])
             if rep.when == "call" for name, value in rep.user_properties if name == "criterion"]
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split("] ")[1].split(".")[0])):
            terminalreporter.write_line(line)
