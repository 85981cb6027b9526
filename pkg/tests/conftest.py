from __future__ import annotations

import pytest

from maxleaf import generators as gen
from maxleaf.instance import build_from_cubic

SMALL_CUBIC = {
    "k33": gen.k33,
    "prism": gen.prism,
    "petersen": gen.petersen,
    "cubic8": lambda: gen.random_cubic(8, 1),
    "cubic12": lambda: gen.random_cubic(12, 2),
}


@pytest.fixture(params=sorted(SMALL_CUBIC))
def cubic_graph(request):
    return SMALL_CUBIC[request.param]()


@pytest.fixture(scope="session")
def k33_instance():
    return build_from_cubic(gen.k33())


@pytest.fixture(scope="session")
def prism_instance():
    return build_from_cubic(gen.prism())


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def record():
    """Record one acceptance line: ``record(number, title, ok, detail)``."""

    def _record(number: int, title: str, ok: bool, detail: str = "") -> bool:
        line = f"criterion {number:>2} {'PASS' if ok else 'FAIL'}: {title}"
        if detail:
            line += f" ({detail})"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
