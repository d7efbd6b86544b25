import re

import pytest

from symhodge.catalog import builtin_entries
from symhodge.cealg import build_operators
from symhodge.superalg import full_report


@pytest.fixture(scope="session")
def built_catalog():
    """name -> (entry, module, report) for every builtin entry, built once."""
    out = {}
    for entry in builtin_entries():
        pres, struct = entry.parse()
        module = build_operators(struct, pres)
        out[entry.name] = (entry, module, full_report(module))
    return out


def _criterion_of(nodeid: str):
    m = re.search(r"test_acceptance\.py::test_c(\d+)_(\w+)", nodeid)
    if m:
        return int(m.group(1)), m.group(2)
    return None


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion."""
    results = {}
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            crit = _criterion_of(getattr(rep, "nodeid", ""))
            if crit is not None:
                ok = status == "passed"
                num, name = crit
                results[num] = (name, results.get(num, (name, True))[1] and ok)
    if results:
        terminalreporter.write_line("")
        terminalreporter.write_line("acceptance criteria:")
        for num in sorted(results):
            name, ok = results[num]
            terminalreporter.write_line(
                f"  criterion {num} ({name}): {'PASS' if ok else 'FAIL'}")
