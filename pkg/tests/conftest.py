"""Shared pytest wiring.

Turns the outcome of each ``test_cNN_*`` function in test_acceptance.py into
one ``ACCEPTANCE NN <name>: PASS/FAIL`` line in the terminal summary, with
the detail string the test recorded in ``test_acceptance.DETAILS``.
"""

from __future__ import annotations

import re
import sys

_ACCEPT_RE = re.compile(r"test_acceptance\.py::test_c(\d+)_([a-z0-9_]+)")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    verdicts = {}
    for rep in terminalreporter.stats.get("passed", []):
        match = _ACCEPT_RE.search(getattr(rep, "nodeid", ""))
        if match:
            verdicts[int(match.group(1))] = ("PASS", match.group(2))
    for status in ("failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            match = _ACCEPT_RE.search(getattr(rep, "nodeid", ""))
            if match:
                verdicts[int(match.group(1))] = ("FAIL", match.group(2))
    if not verdicts:
        return
    module = sys.modules.get("test_acceptance")
    details = getattr(module, "DETAILS", {})
    terminalreporter.section("acceptance criteria")
    for num in sorted(verdicts):
        verdict, slug = verdicts[num]
        note = details.get(num, "")
        suffix = f" ({note})" if note else ""
        terminalreporter.write_line(
            f"ACCEPTANCE {num:02d} {slug.replace('_', '-')}: {verdict}{suffix}")
