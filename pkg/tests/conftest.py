import pytest

from fpec.generators import c5_chain, cycle, cycle_chain, theta, two_pentagons, wheel

_ACCEPTANCE_KEY = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_ACCEPTANCE_KEY] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_ACCEPTANCE_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)


@pytest.fixture
def acceptance_line(request):
    """Record one PASS/FAIL line; it is printed now and in the session summary."""

    def record(number: int, ok: bool, detail: str):
        line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}"
        print(line)
        request.config.stash[_ACCEPTANCE_KEY].append(line)
        return ok

    return record


def fixture_maps():
    out = {"digon": cycle(2)}
    out.update({f"C{n}": cycle(n) for n in range(3, 13)})
    out["theta"] = theta(3)
    out["W4"] = wheel(4)
    out["two-pentagons"] = two_pentagons()
    out["c5-chain-4"] = c5_chain(4)
    out["bowtie"] = cycle_chain([3, 3])
    out["W6"] = wheel(6)
    return out
