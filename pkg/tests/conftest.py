import hypothesis.strategies as st
import pytest

from grassembed.partitions import Partition

ACCEPTANCE_LINES = []


def partitions(max_rows=4, max_part=4, max_size=None):
    parts = st.lists(st.integers(min_value=0, max_value=max_part), max_size=max_rows)
    out = parts.map(lambda xs: Partition(sorted(xs, reverse=True)))
    if max_size is not None:
        out = out.filter(lambda p: p.size <= max_size)
    return out


@pytest.fixture
def record_acceptance():
    def rec(line):
        ACCEPTANCE_LINES.append(line)
        print(line)

    return rec


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
