"""One test per acceptance criterion.  The PASS/FAIL lines are also
collected and printed in the terminal summary (see conftest.py)."""

import pytest

from invseq import acceptance

RESULTS = []


@pytest.mark.parametrize("check", acceptance.CRITERIA, ids=[f"criterion_{i}" for i in range(1, 13)])
def test_criterion(check):
    r = check()
    lines = [acceptance.format_line(r), f"    detail: {r.detail}"]
    lines += [f"    {title}: {verdict}" for title, verdict in r.consistency]
    if r.note:
        lines.append(f"    {r.note}")
    RESULTS.append((r.number, lines))
    print("\n".join(lines))
    assert r.passed, f"criterion {r.number} failed: {r.detail}"
