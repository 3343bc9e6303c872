import pytest
from hypothesis import strategies as st

from grassiso.partitions import Partition


@st.composite
def partitions(draw, max_rows: int = 7, max_part: int = 7):
    rows = draw(st.lists(st.integers(1, max_part), max_size=max_rows))
    return Partition(tuple(sorted(rows, reverse=True)))


@pytest.fixture
def P():
    return lambda *parts: Partition(tuple(parts))
