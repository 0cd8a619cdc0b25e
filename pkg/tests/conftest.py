import pytest
from hypothesis import strategies as st

from hookschur.partitions import GeneralizedPartition, Partition

ACCEPTANCE_LINES: list[str] = []


def partitions(max_size=8, max_length=None):
    """Hypothesis strategy for partitions."""

    @st.composite
    def build(draw):
        n = draw(st.integers(0, max_size))
        parts = []
        remaining = n
        upper = n
        while remaining:
            if max_length is not None and len(parts) == max_length:
                break
            p = draw(st.integers(1, min(upper, remaining)))
            parts.append(p)
            remaining -= p
            upper = p
        return Partition(parts)

    return build()


def generalized(length, max_abs=3):
    return st.lists(st.integers(-max_abs, max_abs), min_size=length, max_size=length).map(
        lambda xs: GeneralizedPartition(sorted(xs, reverse=True))
    )


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def acceptance_lines():
    return ACCEPTANCE_LINES
