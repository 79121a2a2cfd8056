import random
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

from hakenpoly import fileio  # noqa: E402
from hakenpoly.library import random_polyhedron  # noqa: E402

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

FIXTURES = sorted(p.name for p in (Path(fileio.__file__).parent / "data").glob("*.json") if p.name != "bigon.json")


@pytest.fixture
def data():
    return lambda name: fileio.load(fileio.data_path(name if name.endswith(".json") else name + ".json"))


def generated_polyhedra(n: int, seed: int = 7, max_vertices: int = 12):
    rng = random.Random(seed)
    return [random_polyhedron(rng, rng.randint(1, 8), max_vertices=max_vertices) for _ in range(n)]


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def report_criterion():
    def record(number: int, passed: bool, detail: str) -> None:
        line = f"criterion {number}: {'PASS' if passed else 'FAIL'}  {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
