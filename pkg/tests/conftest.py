import pytest

from gaussfano import Chart, Ideal, PolyRing, VarietyFile

CHART_NAMES = ("a", "b", "c", "d")


@pytest.fixture(scope="session")
def cone():
    return VarietyFile.builtin("cone").ideal()


@pytest.fixture(scope="session")
def quadric():
    return VarietyFile.builtin("quadric").ideal()


@pytest.fixture(scope="session")
def symmetroid():
    return VarietyFile.builtin("symmetroid").ideal()


@pytest.fixture(scope="session")
def hyperplane():
    return VarietyFile.builtin("hyperplane").ideal()


@pytest.fixture
def abcd():
    return PolyRing(CHART_NAMES)


@pytest.fixture
def cone_chart_target(abcd):
    return Ideal(abcd, [abcd("a - b^2"), abcd("c - 2*b*d"), abcd("d^2")])


@pytest.fixture(params=[(1, 4), (2, 4)], ids=["chart-1,4", "chart-2,4"])
def cone_chart(request):
    return Chart(3, request.param, CHART_NAMES)


# -- acceptance summary: one line per criterion -----------------------------------

_criteria: dict[str, list] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    props = dict(report.user_properties)
    if "criterion" in props:
        entry = _criteria.setdefault(props["criterion"], [True, 0.0])
        entry[0] = entry[0] and report.passed
        entry[1] += props.get("seconds", report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria, key=lambda n: int(n.split()[0])):
        ok, seconds = _criteria[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {name}  ({seconds:.3f}s)")
